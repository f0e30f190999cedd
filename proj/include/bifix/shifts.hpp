#ifndef BIFIX_SHIFTS_HPP
#define BIFIX_SHIFTS_HPP

#include <map>
#include <memory>
#include <set>
#include <variant>

#include "bifix/dfa.hpp"
#include "bifix/monoid.hpp"

namespace bifix {

/// Raised when a semi-decision (factor stabilization, return-word
/// completeness, base-word search) fails within its configured bound.
struct StabilizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Endomorphism of A* given by letter rules; nonempty images required.
class Substitution {
public:
  Substitution(Alphabet alphabet, std::map<char, Word> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<char, Word>& rules() const { return rules_; }
  const Word& rule(char c) const { return rules_.at(c); }

  Word apply(const Word& w) const;
  Word iterate(char seed, int k) const;

  /// Some power of the incidence matrix is entrywise positive, checked up to
  /// exponent (|A|-1)^2 + 1.
  bool is_primitive() const;

  /// phi^k as a substitution.
  Substitution power(int k) const;

private:
  Alphabet alphabet_;
  std::map<char, Word> rules_;
};

/// Strongly connected labeled graph presenting a sofic recurrent set; the
/// factor language is read off the determinized all-states-initial automaton.
class SoficPresentation {
public:
  SoficPresentation(Alphabet alphabet, int vertices,
                    std::vector<std::tuple<int, char, int>> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  int vertices() const { return vertices_; }
  const std::vector<std::tuple<int, char, int>>& edges() const { return edges_; }
  const Dfa& factor_dfa() const { return factor_dfa_; }

private:
  Alphabet alphabet_;
  int vertices_;
  std::vector<std::tuple<int, char, int>> edges_;
  Dfa factor_dfa_;
};

struct ExtensionGraph {
  Word center;
  std::vector<char> left;                     // L(w)
  std::vector<char> right;                    // R(w)
  std::vector<std::pair<char, char>> edges;   // E(w)
  int components = 0;
  bool acyclic = false;
  bool connected = false;
  bool tree = false;
};

struct SetClassification {
  bool tree = true;
  bool connected = true;
  int bound = 0;  // verified up to this factor length, not a proof
  std::optional<Word> tree_witness;       // longest-first failure witnesses
  std::optional<Word> connected_witness;
};

struct ReturnWordSet {
  Word base;
  std::vector<Word> words;  // explicit set (substitutive case)
  std::optional<Dfa> language;  // rational set (sofic case)
  bool complete = false;    // certificate flag
};

struct EtaImage {
  std::vector<Transformation> all;       // eta images of all of F
  std::vector<Transformation> longword;  // images attained by arbitrarily long words
};

/// Recurrent set given by a primitive substitution (optionally followed by a
/// letter-to-letter projection) or by a sofic presentation. Factor sets are
/// cached per length with an exactness certificate.
class RecurrentSet {
public:
  struct Substitutive {
    Substitution subst;
    char seed;
    std::map<char, char> projection;  // empty = identity
  };

  static RecurrentSet substitutive(Substitution s, char seed,
                                   std::map<char, char> projection = {});
  static RecurrentSet sofic(SoficPresentation p);

  bool is_substitutive() const { return std::holds_alternative<Substitutive>(source_); }
  bool is_sofic() const { return std::holds_alternative<SoficPresentation>(source_); }
  const Substitutive& substitutive_source() const { return std::get<Substitutive>(source_); }
  const SoficPresentation& sofic_source() const { return std::get<SoficPresentation>(source_); }

  /// Output alphabet (after projection, for substitutive sources).
  const Alphabet& alphabet() const { return alphabet_; }

  bool uniformly_recurrent() const { return is_substitutive(); }

  /// Exact set of factors of length <= n (certified; see the width-closed
  /// iteration in the implementation). Cached and monotone in n.
  const std::set<Word>& factors(int n) const;

  bool member(const Word& w) const;

  ExtensionGraph extension_graph(const Word& w) const;

  /// Bounded verification over all factors of length <= bound.
  SetClassification classify_set(int bound) const;

  /// First return words of F to u: v with uv in F ending in u and u not an
  /// internal factor of uv. Substitutive: explicit finite set with a
  /// completeness certificate (throws StabilizationError past cap). Sofic:
  /// exact rational language.
  ReturnWordSet return_words(const Word& u, int cap = 512) const;

  /// Exact eta-image sets of F under the homomorphism into the transition
  /// monoid of the given automaton (certified fixpoint engines; see docs in
  /// the implementation).
  EtaImage eta_image(const Dfa& aut) const;

  /// A word of F of the requested length (shortlex-least), for base-word
  /// selection and degree probes.
  Word some_factor(int length) const;

private:
  RecurrentSet(std::variant<Substitutive, SoficPresentation> source, Alphabet alphabet)
      : source_(std::move(source)), alphabet_(std::move(alphabet)) {}

  std::variant<Substitutive, SoficPresentation> source_;
  Alphabet alphabet_;

  // factor cache (substitutive sources; sofic membership is automaton-exact
  // but bounded enumerations are cached here too)
  mutable std::set<Word> factor_cache_;
  mutable int factor_cache_len_ = -1;

  // internal power of the substitution with expansion >= 2 and all letters
  // present in every image
  mutable std::optional<Substitution> good_power_;
  const Substitution& good_power() const;

  void compute_factors_substitutive(int n) const;
  void compute_factors_sofic(int n) const;
};

}  // namespace bifix

#endif
