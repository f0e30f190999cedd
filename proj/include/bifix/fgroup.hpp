#ifndef BIFIX_FGROUP_HPP
#define BIFIX_FGROUP_HPP

#include <memory>
#include <optional>

#include <json.hpp>

#include "bifix/codes.hpp"
#include "bifix/green.hpp"
#include "bifix/shifts.hpp"

namespace bifix {

struct AnalysisOptions {
  int max_factor_len = 24;
  std::size_t monoid_cap = 100000;
  std::size_t iso_cap = 20160;
  int window = 3;
  int return_cap = 512;
  int classify_bound = 0;  // 0 = skip bounded classification
  bool equivalence = false;
};

/// Lazy analysis bundle for a code X inside a recurrent set F: star automaton,
/// transition monoid, Green data, the F-minimum J-class, F-degree and F-group.
class FPair {
public:
  FPair(Dfa code, const RecurrentSet& f, AnalysisOptions opts = {});

  const Dfa& code() const { return code_; }
  const Dfa& star() const { return star_; }
  const RecurrentSet& shift() const { return f_; }
  const AnalysisOptions& options() const { return opts_; }

  const TransitionMonoid& monoid() const;
  const GreenData& green() const;

  /// Minimum J-class of the star monoid meeting the eta-image of F.
  JClassId f_min_jclass() const;

  /// Rank of the F-minimum class, cross-validated against parse counts of
  /// non-internal factors.
  int f_degree() const;

  const PermutationGroupOnSet& f_group() const;

  /// Base-word action group: domain = image of eta(u) in the star automaton,
  /// generators = actions of the first return words of F to u.
  PermutationGroupOnSet return_word_group(const Word& u) const;

  /// Lex-least factor of the given length whose image lies in the F-minimum
  /// class, if any.
  std::optional<Word> base_word(int length) const;

  /// Bounded two-sided F-completeness check of the code (exact for sofic F).
  bool f_maximal() const;

private:
  Dfa code_;
  Dfa star_;
  const RecurrentSet& f_;
  AnalysisOptions opts_;

  mutable std::unique_ptr<TransitionMonoid> monoid_;
  mutable std::unique_ptr<GreenData> green_;
  mutable std::optional<JClassId> jmin_;
  mutable std::optional<int> fdeg_;
  mutable std::unique_ptr<PermutationGroupOnSet> fgroup_;
};

struct ChargedEvidence {
  int length;
  Word base;
  std::size_t group_order;
};

struct ChargedVerdict {
  bool charged = false;
  std::size_t expected_order = 0;  // |G_F(X)| resp. |G(Z)|
  bool jmin_is_minimum_ideal = false;
  std::vector<ChargedEvidence> evidence;
  int window = 0;
};

/// Weak F-chargedness of X: return-word group order equals |G_F(X)| across a
/// stabilization window of consecutive qualifying base lengths.
ChargedVerdict is_weakly_f_charged(const FPair& x);

/// F-chargedness of Z: the F-minimum class of M(Z*) is the minimum ideal and
/// the return-word group in M(Z*) has order |G(Z)| across the window.
ChargedVerdict is_f_charged(const Dfa& z_code, const RecurrentSet& f, AnalysisOptions opts = {});

/// X = Z cap F. Sofic: automaton intersection (exact). Substitutive: factor
/// enumeration with the proper-prefix stop certificate; throws
/// StabilizationError past the factor bound.
Dfa intersect_code_with_shift(const Dfa& z_code, const RecurrentSet& f, AnalysisOptions opts = {});

/// Every idempotent of the subsemigroup generated by the letter images lies
/// in its minimum ideal.
bool nil_simple(const TransitionMonoid& m, const GreenData& g);

/// F-degree through parse counts alone: delta_X of the first factor of F
/// that is not an internal factor of the code (no monoid construction).
/// Throws StabilizationError when no such factor exists within the bound.
int f_degree_via_parses(const Dfa& code, const RecurrentSet& f, int bound = 24);

struct ConsistencyReport {
  bool item1_charged = false;
  bool item2 = false;  // d_F(X)=d(Z), G_F(X) iso G(Z), weakly charged
  bool item3 = false;  // d_F(X)=d(Z), |G_F(X)|=|G(Z)|, weakly charged
  bool agree = false;
  bool nil_simple_hypothesis = false;
  std::optional<bool> connected_within_bound;  // set when classification ran
  int dZ = 0;
  int dFX = 0;
  std::size_t gZ_order = 0;
  std::size_t gFX_order = 0;
  bool weakly_charged = false;
  bool iso = false;
};

ConsistencyReport theorem_consistency(const Dfa& z_code, const RecurrentSet& f,
                                      AnalysisOptions opts = {});

struct EquivalenceWitness {
  std::vector<std::pair<int, int>> f;              // state pairs (x in M_X*, y in M_Z*)
  std::vector<std::pair<Word, Word>> alpha;        // generator word -> image word
  int degree = 0;
  Word base;
};

/// Permutation-group equivalence (f, alpha) between the F-group action and
/// the G(Z) action, built from return-word products over a base word and
/// verified exhaustively. Requires a charged pair; well-definedness failures
/// throw.
EquivalenceWitness permutation_equivalence(const Dfa& z_code, const RecurrentSet& f,
                                           AnalysisOptions opts = {});

bool transitivity_check(const PermutationGroupOnSet& g);

/// Small-group display name: C_n, S_n, A_n when recognizable, order otherwise.
std::string group_name(const PermutationGroupOnSet& g);

struct AnalysisReport {
  CodeAnalysis z;
  std::size_t z_monoid_size = 0;
  std::size_t x_monoid_size = 0;
  int dZ = 0;
  std::size_t gZ_order = 0;
  std::string gZ_name;
  int dFX = 0;
  std::size_t gFX_order = 0;
  std::string gFX_name;
  ChargedVerdict charged;
  ChargedVerdict weakly;
  ConsistencyReport consistency;
  std::optional<EquivalenceWitness> equivalence;
  std::optional<SetClassification> classification;
};

AnalysisReport analyze(const Dfa& z_code, const RecurrentSet& f, AnalysisOptions opts = {});

nlohmann::json report_to_json(const AnalysisReport& r);

}  // namespace bifix

#endif
