#ifndef BIFIX_GREEN_HPP
#define BIFIX_GREEN_HPP

#include <vector>

#include "bifix/monoid.hpp"
#include "bifix/permgroup.hpp"

namespace bifix {

using JClassId = int;

/// Green structure of a transition monoid: R-, L-, J- and H-class
/// identifiers, J-class condensation edges, regularity and idempotents.
/// R-classes are the strongly connected components of the right Cayley graph,
/// L dually, J from the two-sided graph; H = R intersect L.
class GreenData {
public:
  explicit GreenData(const TransitionMonoid& m);

  const TransitionMonoid& monoid() const { return m_; }

  int rclass(int id) const { return rclass_[static_cast<size_t>(id)]; }
  int lclass(int id) const { return lclass_[static_cast<size_t>(id)]; }
  JClassId jclass(int id) const { return jclass_[static_cast<size_t>(id)]; }

  int num_rclasses() const { return num_r_; }
  int num_lclasses() const { return num_l_; }
  int num_jclasses() const { return num_j_; }

  const std::vector<int>& jclass_members(JClassId j) const {
    return jmembers_[static_cast<size_t>(j)];
  }
  /// Common rank of the class members.
  int jclass_rank(JClassId j) const;
  bool regular(JClassId j) const { return regular_[static_cast<size_t>(j)]; }
  const std::vector<int>& idempotents() const { return idempotents_; }

  /// lower <= upper in the J-order (lower lies in the ideal generated by
  /// upper), decided by reachability over the condensation DAG.
  bool j_below(JClassId lower, JClassId upper) const;

  /// The unique J-minimum class; always regular in a finite monoid.
  JClassId minimum_ideal() const { return minimum_ideal_; }

  /// H-class of an element: all elements R- and L-equivalent to it.
  std::vector<int> hclass_of(int id) const;

  /// Direct condensation edges upper -> lower (one multiplication step).
  const std::vector<std::vector<int>>& j_edges() const { return jedges_; }

private:
  const TransitionMonoid& m_;
  std::vector<int> rclass_, lclass_, jclass_;
  int num_r_ = 0, num_l_ = 0, num_j_ = 0;
  std::vector<std::vector<int>> jmembers_;
  std::vector<bool> regular_;
  std::vector<int> idempotents_;
  std::vector<std::vector<int>> jedges_;  // condensation adjacency (to lower classes)
  JClassId minimum_ideal_ = 0;
};

/// Schützenberger group of a regular J-class: the faithful permutation group
/// induced on the image of the shortlex-least idempotent of the class by the
/// members of that idempotent's H-class. Generator labels are witness words.
PermutationGroupOnSet schutzenberger_group(const TransitionMonoid& m, const GreenData& g,
                                           JClassId j);

}  // namespace bifix

#endif
