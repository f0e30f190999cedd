#ifndef BIFIX_MONOID_HPP
#define BIFIX_MONOID_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bifix/dfa.hpp"

namespace bifix {

/// Partial transformation of the state set of a Dfa; entry -1 is undefined.
using Transformation = std::vector<int16_t>;

constexpr int16_t UNDEF = -1;

Transformation identity_transformation(int n);
Transformation letter_transformation(const Dfa& d, int letter_index);

/// Apply t then u.
Transformation compose(const Transformation& t, const Transformation& u);

/// Cardinal of the defined, deduplicated image.
int rank(const Transformation& t);

/// Sorted defined image of t.
std::vector<int> image_of(const Transformation& t);

bool is_idempotent(const Transformation& t);

/// The unique idempotent power of t (finite omega power).
Transformation omega_power(const Transformation& t);

struct MonoidCapExceeded : std::runtime_error {
  explicit MonoidCapExceeded(std::size_t cap)
      : std::runtime_error("transition monoid exceeds element cap " + std::to_string(cap)) {}
};

/// Transition monoid of a Dfa: deduplicated transformations closed under
/// composition, with the identity as element 0, one element per shortlex-least
/// witness word. Element ids follow BFS discovery order, which is the shortlex
/// order of the witnesses. Immutable after construction.
class TransitionMonoid {
public:
  explicit TransitionMonoid(const Dfa& d, std::size_t cap = 100000);

  const Dfa& automaton() const { return dfa_; }
  int num_states() const { return dfa_.size(); }
  std::size_t size() const { return num_elements_; }

  Transformation element(int id) const;
  int rank_of(int id) const;
  bool idempotent(int id) const;

  int gen(int letter_index) const { return gens_[static_cast<size_t>(letter_index)]; }

  /// Right Cayley edge: id of element(id) composed with the letter.
  int right_step(int id, int letter_index) const {
    return rcay_[static_cast<size_t>(id) * num_letters_ + letter_index];
  }
  /// Left Cayley edge: id of letter composed with element(id).
  int left_step(int id, int letter_index) const {
    return lcay_[static_cast<size_t>(id) * num_letters_ + letter_index];
  }

  int compose_ids(int s, int t) const;

  /// Shortlex-least word mapping to the element.
  Word witness(int id) const;

  /// Id of the transformation, if it belongs to the monoid.
  std::optional<int> find(const Transformation& t) const;

  /// Element of a word (always defined; the monoid is closed).
  int eta(const Word& w) const;

  /// Idempotent power, as an element id.
  int omega_power_id(int id) const;

  /// m1 <= m2 in the syntactic order of the automaton's language
  /// (contexts over the monoid; the automaton must be minimal for
  /// antisymmetry). Guarded by a size cap since the test is quadratic.
  bool syntactic_leq(int m1, int m2) const;

private:
  const int16_t* raw(int id) const { return data_.data() + static_cast<size_t>(id) * n_; }
  void ensure_context_bitsets() const;

  Dfa dfa_;
  int n_ = 0;             // states
  int num_letters_ = 0;
  std::size_t num_elements_ = 0;
  std::vector<int16_t> data_;   // num_elements * n
  std::vector<int> gens_;
  std::vector<int32_t> rcay_;
  std::vector<int32_t> lcay_;
  std::vector<int32_t> parent_;       // BFS parent element
  std::vector<int16_t> parent_letter_;  // letter from parent (-1 for identity)

  // lazy: per-state bitset over elements t with t(p) final; plus the
  // state-pair subset matrix used by syntactic_leq
  mutable std::vector<uint64_t> accept_bits_;
  mutable std::vector<uint8_t> state_subset_;
  mutable std::vector<uint8_t> state_has_accepting_;
  mutable bool context_ready_ = false;
  mutable std::unordered_map<uint64_t, std::vector<int32_t>> find_index_;
};

}  // namespace bifix

#endif
