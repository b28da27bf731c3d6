#pragma once

// Complete, duplicate-free enumeration of loop-free finite-block diagrams
// within a displacement bound, with family shape constraints applied during
// the recursion and planarity/predicates as post-filters.

#include <functional>

#include "adm/families.hpp"

namespace adm {

struct EnumSpec {
  int32_t s = 0, t = 0;
  int maxDisp = 0;             // bound on the copy-span of any block
  size_t maxBlockSize = 0;     // 0 = unbounded
  bool rookPairing = false;    // size-2 blocks must pair one bottom and one top vertex
  bool planarOnly = false;
  std::optional<int> throughCount;
  std::function<bool(const AffineDiagram&)> predicate;  // optional
  size_t cap = 2000000;        // candidate cap, throws when exceeded
};

std::vector<AffineDiagram> enumerate_diagrams(const EnumSpec& spec);

// Shape constraints of a base family translated into an EnumSpec.
EnumSpec enum_spec_for(Base base, int32_t s, int32_t t, int maxDisp);

}  // namespace adm
