#ifndef BIFIX_DFA_HPP
#define BIFIX_DFA_HPP

#include <optional>
#include <vector>

#include "bifix/word.hpp"

namespace bifix {

/// Trim partial deterministic automaton. Every rational language in the
/// system is carried by one of these. States are 0..size()-1; a missing
/// transition is NO_STATE. Values are immutable after construction.
class Dfa {
public:
  static constexpr int NO_STATE = -1;

  Dfa() = default;
  Dfa(Alphabet alphabet, int num_states, int initial, std::vector<bool> finals,
      std::vector<int> delta);

  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return num_states_; }
  int initial() const { return initial_; }
  bool is_final(int q) const { return finals_[static_cast<size_t>(q)]; }
  const std::vector<bool>& finals() const { return finals_; }
  int num_finals() const;

  // transition by letter index; NO_STATE when undefined or q == NO_STATE
  int step_index(int q, int letter_index) const {
    if (q == NO_STATE) return NO_STATE;
    return delta_[static_cast<size_t>(q) * alphabet_.size() + letter_index];
  }
  int step(int q, char c) const { return step_index(q, alphabet_.index(c)); }
  int run(int q, const Word& w) const;

  bool accepts(const Word& w) const;
  bool accepts_empty_language() const { return num_finals() == 0; }

  int out_degree(int q) const;

  bool operator==(const Dfa& o) const;

private:
  Alphabet alphabet_;
  int num_states_ = 1;
  int initial_ = 0;
  std::vector<bool> finals_{false};
  std::vector<int> delta_{};  // num_states * |alphabet|, row-major
};

// --- construction -----------------------------------------------------------

/// Minimal Dfa of a finite word list (empty list gives the empty language).
Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words);

/// Automaton of A* (one looping accepting state).
Dfa universal(const Alphabet& alphabet);

/// Automaton of A+.
Dfa universal_plus(const Alphabet& alphabet);

/// Automaton of the single word w.
Dfa literal(const Alphabet& alphabet, const Word& w);

// --- normalization ----------------------------------------------------------

/// Remove unreachable and non-co-reachable states; canonical BFS numbering
/// under alphabet order. An empty language becomes the 1-state automaton with
/// no finals.
Dfa trim(const Dfa& d);

/// Unique minimal trim partial Dfa of the same language, states BFS-ordered.
Dfa minimize(const Dfa& d);

// --- combinations -----------------------------------------------------------

enum class BoolOp { Intersection, Union, Difference };

/// Minimal Dfa of the boolean combination. Throws on alphabet mismatch.
Dfa combine(BoolOp op, const Dfa& l, const Dfa& r);

Dfa intersection(const Dfa& l, const Dfa& r);
Dfa union_of(const Dfa& l, const Dfa& r);
Dfa difference(const Dfa& l, const Dfa& r);

/// L(l) subset of L(r), decided as emptiness of difference.
bool is_subset(const Dfa& l, const Dfa& r);
bool same_language(const Dfa& l, const Dfa& r);

/// Minimal Dfa of the concatenation of the parts' languages.
Dfa concatenation(const std::vector<Dfa>& parts);

/// Minimal Dfa of L(code)*. Requires 1 not in L(code).
Dfa star_automaton(const Dfa& code);

/// Minimal Dfa of Pref(L): every word readable in the trim automaton.
Dfa prefix_closure(const Dfa& d);

/// Minimal Dfa of Suff(L).
Dfa suffix_closure(const Dfa& d);

/// Minimal Dfa of the reversal of L.
Dfa reversal(const Dfa& d);

}  // namespace bifix

#endif
