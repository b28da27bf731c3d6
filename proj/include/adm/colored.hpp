#pragma once

// Colored form of a loop-free finite-block diagram: a set partition of the
// fundamental vertices together with an integer displacement per vertex,
// relative to the block's first vertex in (side, pos) order (bottom row
// first). Composing in colored form tracks displacement sums along glued
// strands and is used as an independent cross-check of compose().

#include "adm/diagram.hpp"

namespace adm {

struct ColoredBlock {
  // (side, pos, relative displacement); first entry has displacement 0
  std::vector<std::tuple<int8_t, int32_t, int32_t>> verts;
  friend auto operator<=>(const ColoredBlock&, const ColoredBlock&) = default;
};

struct ColoredDiagram {
  int32_t s = 0, t = 0;
  std::vector<ColoredBlock> blocks;
  friend auto operator<=>(const ColoredDiagram&, const ColoredDiagram&) = default;
};

// Requires loops = 0 and no wrapping blocks; throws otherwise.
ColoredDiagram to_colored(const AffineDiagram& d);
AffineDiagram from_colored(const ColoredDiagram& cd);

// Juxtaposition: g placed to the right of f.
ColoredDiagram colored_tensor(const ColoredDiagram& f, const ColoredDiagram& g);

struct ColoredCompose {
  ColoredDiagram diagram;
  int64_t betaExp = 0;   // removed components with zero net winding
  int64_t alphaExp = 0;  // removed components with nonzero net winding
};
ColoredCompose compose_colored(const ColoredDiagram& a, const ColoredDiagram& b);

// D = (prod_i t_i^{left[i]}) D0 (prod_j t_j^{right[j]}) with D0 ordinary
// (all displacements zero). Through blocks anchor their winding on the top
// (left) side: the minimal bottom vertex of every block carries exponent 0.
struct WindingNormalForm {
  std::vector<int64_t> leftExps;   // length = top arity
  AffineDiagram ordinary;
  std::vector<int64_t> rightExps;  // length = bottom arity
};
WindingNormalForm winding_normal_form(const AffineDiagram& d);

}  // namespace adm
