#pragma once

// Translation-invariant set partitions of two integer boundary rows on an
// infinite strip, together with a count of non-contractible loops. A diagram
// with bottom arity s and top arity t is invariant under the single
// translation T that shifts bottom indices by s and top indices by t at once;
// we store one descriptor per T-orbit of blocks.
//
// Composition stacks two diagrams and resolves the middle row by a
// displacement-weighted union-find over block orbits: each union carries an
// integer translate offset, and a union that closes a cycle of net
// displacement d > 0 marks the component as wrapping. No finite window is
// consulted for composition correctness; windows are used for validation
// checks only.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adm/scalar.hpp"

namespace adm {

struct Vertex {
  int8_t side;    // 0 = bottom, 1 = top
  int32_t pos;    // index within a fundamental copy, 0-based
  int32_t copy;   // which fundamental copy
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    // order: copy, then side (bottom < top), then index
    if (a.copy != b.copy) return a.copy <=> b.copy;
    if (a.side != b.side) return a.side <=> b.side;
    return a.pos <=> b.pos;
  }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Block {
  // period 0: finite block, verts is the whole vertex set of one orbit
  // representative. period k >= 1: wrapping block, the block as a set is
  // verts translated by all multiples of k.
  int32_t period = 0;
  std::vector<Vertex> verts;
  bool wrapping() const { return period > 0; }
  bool has_bottom() const;
  bool has_top() const;
  int32_t min_copy() const;
  int32_t max_copy() const;
  int32_t span() const { return wrapping() ? period : max_copy() - min_copy(); }
  friend auto operator<=>(const Block& a, const Block& b) {
    if (a.verts != b.verts) return a.verts < b.verts ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    return a.period <=> b.period;
  }
  friend bool operator==(const Block&, const Block&) = default;
};

class AffineDiagram {
 public:
  AffineDiagram() = default;

  int32_t bottom_arity() const { return s_; }
  int32_t top_arity() const { return t_; }
  int64_t loops() const { return loops_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  int32_t max_span() const;
  int through_count() const;  // blocks containing both a bottom and a top vertex
  bool has_wrapping() const;
  AffineDiagram with_loops(int64_t loops) const;

  friend auto operator<=>(const AffineDiagram& a, const AffineDiagram& b) {
    if (a.s_ != b.s_) return a.s_ <=> b.s_;
    if (a.t_ != b.t_) return a.t_ <=> b.t_;
    if (a.loops_ != b.loops_) return a.loops_ <=> b.loops_;
    return a.blocks_ < b.blocks_   ? std::strong_ordering::less
           : a.blocks_ > b.blocks_ ? std::strong_ordering::greater
                                   : std::strong_ordering::equal;
  }
  friend bool operator==(const AffineDiagram&, const AffineDiagram&) = default;

  std::string str() const;

 private:
  friend AffineDiagram canonicalize(int32_t, int32_t, int64_t, std::vector<Block>);
  int32_t s_ = 0, t_ = 0;
  int64_t loops_ = 0;
  std::vector<Block> blocks_;
};

// Normalizes raw orbit descriptors into a canonical diagram. Throws
// std::invalid_argument on overlapping blocks, double-covered or uncovered
// vertices, out-of-range positions, or negative loops. Idempotent on
// canonical input.
AffineDiagram canonicalize(int32_t s, int32_t t, int64_t loops, std::vector<Block> raw);

// Connected components of an edge list (plus isolated vertices), one raw
// finite block per component.
std::vector<Block> blocks_from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges,
                                     const std::vector<Vertex>& isolated = {});

// A diagram with scalar bookkeeping: beta tracks removed contractible middle
// components, alpha tracks removed non-contractible loops (reduced families
// only; the diagram then carries loops = 0).
struct ScaledElement {
  AffineDiagram diagram;
  int64_t betaExp = 0;
  int64_t alphaExp = 0;
  Scalar coeff = Scalar::integer(1);
  friend bool operator==(const ScaledElement& a, const ScaledElement& b) {
    return a.diagram == b.diagram && a.betaExp == b.betaExp && a.alphaExp == b.alphaExp &&
           a.coeff == b.coeff;
  }
  std::string str() const;
};

// Stacks a on top of b (a: m -> n, b: k -> m, result k -> n). New
// non-contractible loops from wrapping middle components are added to the
// result diagram's loop count; betaExp counts removed contractible middle
// component orbits. Throws on arity mismatch.
ScaledElement compose(const AffineDiagram& a, const AffineDiagram& b);

// compose, then move all loops on the result diagram to alphaExp.
ScaledElement compose_reduced(const AffineDiagram& a, const AffineDiagram& b);

// Reflection across a horizontal line: swaps bottom and top. An involution
// and an anti-automorphism for compose.
AffineDiagram involute(const AffineDiagram& d);

// True iff the diagram can be drawn on the strip without edge intersections:
// no loops coexist with through blocks, and no two block translates
// interleave in the boundary order (bottom row left to right, top row right
// to left), tested on a window of width 2*maxSpan+2 copies.
bool is_planar(const AffineDiagram& d);
bool is_planar(const AffineDiagram& d, int32_t window_pad);  // widened window, for tests

// For diagrams with all blocks of size 2 (strands): true iff every vertical
// line i+1/2 is crossed an even number of times, counting the minimal strand
// crossings plus one crossing per non-contractible loop. Throws if a block
// is not a strand.
bool even_test(const AffineDiagram& d);

AffineDiagram identity_diagram(int32_t m);

}  // namespace adm
