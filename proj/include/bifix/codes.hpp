#ifndef BIFIX_CODES_HPP
#define BIFIX_CODES_HPP

#include <optional>

#include "bifix/dfa.hpp"

namespace bifix {

struct CodeKind {
  bool prefix = false;
  bool suffix = false;
  bool bifix = false;
};

/// Prefix / suffix / bifix tests by automaton products and emptiness:
/// prefix iff L cap L.A+ is empty, suffix dually. Requires 1 not in L.
CodeKind code_kind(const Dfa& code);

/// Two-sided completeness over the full shift: A* = Pref(L*) and
/// A* = Suff(L*). Requires a bifix code (throws otherwise).
bool is_maximal_bifix(const Dfa& code);

/// A group automaton: complete, trim, every letter permutes the states, and
/// the initial state is the unique final state.
bool is_group_automaton(const Dfa& aut);

/// The code Z is a group code when the minimal automaton of Z* is a group
/// automaton.
bool is_group_code_language(const Dfa& code);

/// Number of parses of w with respect to the code: triples (v,x,u) with
/// w = vxu, v with no suffix in the code, x in code*, u with no prefix in
/// the code. Counted over cut-position pairs with precompiled automata for
/// A*X, X* and XA*.
long long parse_count(const Dfa& code, const Word& w);

/// Precompiled form for repeated parse counting over one code.
class ParseCounter {
public:
  explicit ParseCounter(const Dfa& code);
  long long count(const Word& w) const;

private:
  Dfa astar_x_, x_star_, x_astar_;
};

/// Degree of a bifix code: the rank of the minimum ideal of the transition
/// monoid of the star automaton when the code is maximal bifix, infinite
/// (nullopt) otherwise.
std::optional<int> degree(const Dfa& code, std::size_t monoid_cap = 100000);

/// True iff A+ w A+ meets the code, i.e. w is an internal factor of a
/// codeword.
bool internal_factor_test(const Dfa& code, const Word& w);

/// True iff the code automaton is acyclic (finitely many codewords).
bool is_finite_language(const Dfa& d);

struct CodeAnalysis {
  CodeKind kind;
  bool maximal_bifix = false;
  bool group_code = false;
  std::optional<int> deg;  // nullopt = infinite
  Dfa code_dfa;
  Dfa star_dfa;
};

CodeAnalysis analyze_code(const Dfa& code, std::size_t monoid_cap = 100000);

}  // namespace bifix

#endif
