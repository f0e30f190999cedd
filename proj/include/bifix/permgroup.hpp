#ifndef BIFIX_PERMGROUP_HPP
#define BIFIX_PERMGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "bifix/word.hpp"

namespace bifix {

/// Faithful permutation group on an ordered finite set of Dfa states.
/// Permutations are stored as index maps over the domain (perm[i] = index of
/// the image of domain[i]); the closure always contains the identity and is
/// closed under composition and inverse.
class PermutationGroupOnSet {
public:
  using Perm = std::vector<int>;

  PermutationGroupOnSet(std::vector<int> domain,
                        std::vector<std::pair<Word, Perm>> generators);

  const std::vector<int>& domain() const { return domain_; }
  int degree() const { return static_cast<int>(domain_.size()); }
  const std::vector<std::pair<Word, Perm>>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Perm& p) const;

  /// Single-orbit test on the domain.
  bool transitive() const;

  bool abelian() const;

  /// Histogram of element orders, an isomorphism invariant.
  std::vector<std::pair<int, int>> element_order_histogram() const;

  static int perm_order(const Perm& p);
  static Perm compose_perm(const Perm& p, const Perm& q);  // p then q
  static Perm inverse_perm(const Perm& p);

private:
  std::vector<int> domain_;
  std::vector<std::pair<Word, Perm>> generators_;
  std::vector<Perm> elements_;
};

/// Generator map realizing an isomorphism g1 -> g2, if one exists.
/// Quick invariants first, then a backtracking search assigning generator
/// images with matching orders. Throws when either order exceeds the cap.
std::optional<std::vector<std::pair<Word, Word>>> group_iso(const PermutationGroupOnSet& g1,
                                                            const PermutationGroupOnSet& g2,
                                                            std::size_t cap = 20160);

}  // namespace bifix

#endif
