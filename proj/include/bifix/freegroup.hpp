#ifndef BIFIX_FREEGROUP_HPP
#define BIFIX_FREEGROUP_HPP

#include <optional>
#include <vector>

#include "bifix/word.hpp"

namespace bifix {

/// Folded core graph of the subgroup of the free group generated by a set of
/// positive words; vertex 0 is the basepoint. Folded: no vertex carries two
/// equally-labeled outgoing or incoming edges.
struct StallingsGraph {
  Alphabet alphabet;
  int vertices = 1;
  int basepoint = 0;
  std::vector<std::tuple<int, char, int>> edges;  // positively oriented

  bool folded() const;
};

/// Wedge of loops at the basepoint, one per word, folded to the unique
/// folded core graph.
StallingsGraph fold(const std::vector<Word>& words, const Alphabet& alphabet);

/// True iff the graph is a single vertex carrying one loop per letter.
bool generates_full_group(const StallingsGraph& g);

/// Vertex count when every vertex has exactly one outgoing edge per letter,
/// infinite (nullopt) otherwise.
std::optional<int> subgroup_index(const StallingsGraph& g);

}  // namespace bifix

#endif
