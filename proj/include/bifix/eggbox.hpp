#ifndef BIFIX_EGGBOX_HPP
#define BIFIX_EGGBOX_HPP

#include <string>

#include "bifix/green.hpp"

namespace bifix {

enum class EggBoxFormat { Text, Dot, Json };

/// Egg-box rendering of a monoid's Green structure: one block per J-class,
/// H-class grid arranged R-classes x L-classes, idempotent cells starred,
/// elements labeled by witness words, J-classes listed top-down.
std::string egg_box_render(const TransitionMonoid& m, const GreenData& g, EggBoxFormat format);

struct EggBoxCell {
  std::vector<Word> witnesses;
  bool idempotent = false;
};

struct EggBoxBlock {
  JClassId jclass;
  int rank = 0;
  bool regular = false;
  std::vector<std::vector<EggBoxCell>> grid;  // rows x cols
};

struct EggBoxDiagram {
  std::vector<EggBoxBlock> blocks;               // topological, identity first
  std::vector<std::pair<int, int>> order_pairs;  // (lower, upper) block indices
};

EggBoxDiagram egg_box_diagram(const TransitionMonoid& m, const GreenData& g);

}  // namespace bifix

#endif
