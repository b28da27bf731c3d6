#include "adm/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adm {

bool Block::has_bottom() const {
  return std::any_of(verts.begin(), verts.end(), [](const Vertex& v) { return v.side == 0; });
}
bool Block::has_top() const {
  return std::any_of(verts.begin(), verts.end(), [](const Vertex& v) { return v.side == 1; });
}
int32_t Block::min_copy() const {
  int32_t m = verts.front().copy;
  for (auto& v : verts) m = std::min(m, v.copy);
  return m;
}
int32_t Block::max_copy() const {
  int32_t m = verts.front().copy;
  for (auto& v : verts) m = std::max(m, v.copy);
  return m;
}

int32_t AffineDiagram::max_span() const {
  int32_t m = 0;
  for (auto& b : blocks_) m = std::max(m, b.span());
  return m;
}

int AffineDiagram::through_count() const {
  int n = 0;
  for (auto& b : blocks_)
    if (b.has_bottom() && b.has_top()) ++n;
  return n;
}

bool AffineDiagram::has_wrapping() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.wrapping(); });
}

AffineDiagram AffineDiagram::with_loops(int64_t loops) const {
  if (loops < 0) throw std::invalid_argument("with_loops: negative");
  AffineDiagram d = *this;
  d.loops_ = loops;
  return d;
}

namespace {

Block normalize_block(Block b) {
  if (b.verts.empty()) throw std::invalid_argument("canonicalize: empty block");
  std::sort(b.verts.begin(), b.verts.end());
  b.verts.erase(std::unique(b.verts.begin(), b.verts.end()), b.verts.end());
  if (b.period < 0) throw std::invalid_argument("canonicalize: negative period");
  if (b.period > 0) {
    // reduce base into copies [0, period); congruent listings are one vertex
    for (auto& v : b.verts) v.copy = ((v.copy % b.period) + b.period) % b.period;
    std::sort(b.verts.begin(), b.verts.end());
    b.verts.erase(std::unique(b.verts.begin(), b.verts.end()), b.verts.end());
    // minimal period: smallest divisor j of period with base + j == base (mod period)
    for (int32_t j = 1; j < b.period; ++j) {
      if (b.period % j != 0) continue;
      std::vector<Vertex> shifted = b.verts;
      for (auto& v : shifted) v.copy = (v.copy + j) % b.period;
      std::sort(shifted.begin(), shifted.end());
      if (shifted == b.verts) {
        std::vector<Vertex> base;
        for (auto& v : b.verts)
          if (v.copy < j) base.push_back(v);
        b.verts = std::move(base);
        b.period = j;
        break;
      }
    }
  } else {
    // shift so the minimal vertex lies in copy 0
    int32_t shift = b.verts.front().copy;
    for (auto& v : b.verts) v.copy -= shift;
  }
  return b;
}

}  // namespace

AffineDiagram canonicalize(int32_t s, int32_t t, int64_t loops, std::vector<Block> raw) {
  if (s < 0 || t < 0) throw std::invalid_argument("canonicalize: negative arity");
  if (loops < 0) throw std::invalid_argument("canonicalize: negative loops");
  for (auto& b : raw)
    for (auto& v : b.verts) {
      int32_t ar = v.side == 0 ? s : t;
      if (v.side != 0 && v.side != 1) throw std::invalid_argument("canonicalize: bad side");
      if (v.pos < 0 || v.pos >= ar) throw std::invalid_argument("canonicalize: position out of range");
    }
  for (auto& b : raw) b = normalize_block(std::move(b));
  std::sort(raw.begin(), raw.end());
  if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
    throw std::invalid_argument("canonicalize: duplicate block orbit");

  // coverage check: on a window of width 2*maxSpan+2 copies, the orbit
  // translates must partition the window vertices exactly once
  if (s + t > 0) {
    int32_t maxSpan = 0;
    for (auto& b : raw) maxSpan = std::max(maxSpan, b.span());
    int32_t lo = -(maxSpan + 1), hi = maxSpan;  // copies lo..hi inclusive
    std::set<Vertex> seen;
    auto mark = [&](Vertex v) {
      if (v.copy < lo || v.copy > hi) return;
      if (!seen.insert(v).second)
        throw std::invalid_argument("canonicalize: vertex covered twice");
    };
    for (auto& b : raw) {
      if (b.wrapping()) {
        for (auto& v : b.verts)
          for (int32_t c = lo; c <= hi; ++c)
            if (((c - v.copy) % b.period + b.period) % b.period == 0)
              mark({v.side, v.pos, c});
      } else {
        int32_t bmin = b.min_copy(), bmax = b.max_copy();
        for (int32_t d = lo - bmax; d <= hi - bmin; ++d)
          for (auto& v : b.verts) mark({v.side, v.pos, v.copy + d});
      }
    }
    size_t expect = (size_t)(hi - lo + 1) * (size_t)(s + t);
    if (seen.size() != expect)
      throw std::invalid_argument("canonicalize: window coverage gap");
  }

  AffineDiagram d;
  d.s_ = s;
  d.t_ = t;
  d.loops_ = loops;
  d.blocks_ = std::move(raw);
  return d;
}

std::vector<Block> blocks_from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges,
                                     const std::vector<Vertex>& isolated) {
  std::map<Vertex, int> id;
  std::vector<Vertex> verts;
  auto intern = [&](const Vertex& v) {
    auto it = id.find(v);
    if (it != id.end()) return it->second;
    int k = (int)verts.size();
    id[v] = k;
    verts.push_back(v);
    return k;
  };
  std::vector<int> par;
  std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
  for (auto& [u, v] : edges) {
    intern(u);
    intern(v);
  }
  for (auto& v : isolated) intern(v);
  par.resize(verts.size());
  std::iota(par.begin(), par.end(), 0);
  for (auto& [u, v] : edges) {
    int a = find(id[u]), b = find(id[v]);
    if (a != b) par[a] = b;
  }
  std::map<int, Block> comps;
  for (size_t i = 0; i < verts.size(); ++i) comps[find((int)i)].verts.push_back(verts[i]);
  std::vector<Block> out;
  for (auto& [r, b] : comps) out.push_back(std::move(b));
  return out;
}

std::string AffineDiagram::str() const {
  std::ostringstream os;
  os << "diagram s=" << s_ << " t=" << t_ << " loops=" << loops_;
  for (auto& b : blocks_) {
    os << (b.wrapping() ? " | wrap k=" + std::to_string(b.period) : " |");
    for (auto& v : b.verts) {
      os << " " << (v.side == 0 ? "b" : "t") << v.pos;
      if (v.copy > 0) os << "+" << v.copy;
      if (v.copy < 0) os << "-" << -v.copy;
    }
  }
  return os.str();
}

std::string ScaledElement::str() const {
  std::ostringstream os;
  if (!coeff.is_one()) os << coeff.str() << " * ";
  if (betaExp) os << "beta^" << betaExp << " ";
  if (alphaExp) os << "alpha^" << alphaExp << " ";
  os << diagram.str();
  return os.str();
}

namespace {

// Union-find over block orbits where each link carries an integer translate
// offset; a cycle of nonzero net displacement marks the component as
// wrapping with period gcd of all such displacements.
struct WeightedUF {
  std::vector<int> par;
  std::vector<int64_t> off;  // translate c of x is glued to translate c+off[x] of par[x]
  std::vector<int64_t> tor;  // valid at roots; 0 = no torsion

  explicit WeightedUF(size_t n) : par(n), off(n, 0), tor(n, 0) {
    std::iota(par.begin(), par.end(), 0);
  }
  std::pair<int, int64_t> find(int x) {
    if (par[x] == x) return {x, 0};
    auto [r, d] = find(par[x]);
    par[x] = r;
    off[x] += d;
    return {r, off[x]};
  }
  // constraint: translate c of x is glued to translate c+d of y
  void unite(int x, int y, int64_t d) {
    auto [rx, dx] = find(x);
    auto [ry, dy] = find(y);
    if (rx == ry) {
      int64_t delta = std::abs((d + dy) - dx);
      if (delta != 0) tor[rx] = std::gcd(tor[rx], delta);
      return;
    }
    par[rx] = ry;
    off[rx] = d + dy - dx;
    tor[ry] = std::gcd(tor[ry], tor[rx]);
  }
  void seed_torsion(int x, int64_t k) {
    auto [r, dr] = find(x);
    tor[r] = std::gcd(tor[r], k);
  }
};

}  // namespace

ScaledElement compose(const AffineDiagram& a, const AffineDiagram& b) {
  if (a.bottom_arity() != b.top_arity())
    throw std::invalid_argument("compose: arity mismatch");
  const int32_t m = a.bottom_arity();
  const int32_t resS = b.bottom_arity(), resT = a.top_arity();

  const auto& ab = a.blocks();
  const auto& bb = b.blocks();
  const size_t nA = ab.size(), nB = bb.size();
  WeightedUF uf(nA + nB);
  for (size_t i = 0; i < nA; ++i)
    if (ab[i].wrapping()) uf.seed_torsion((int)i, ab[i].period);
  for (size_t i = 0; i < nB; ++i)
    if (bb[i].wrapping()) uf.seed_torsion((int)(nA + i), bb[i].period);

  // (node, shift) pairs covering middle position q at copy 0
  std::vector<std::vector<std::pair<int, int64_t>>> at(m);
  for (size_t i = 0; i < nA; ++i)
    for (auto& v : ab[i].verts)
      if (v.side == 0) at[v.pos].push_back({(int)i, -(int64_t)v.copy});
  for (size_t i = 0; i < nB; ++i)
    for (auto& v : bb[i].verts)
      if (v.side == 1) at[v.pos].push_back({(int)(nA + i), -(int64_t)v.copy});
  for (int32_t q = 0; q < m; ++q) {
    for (size_t j = 1; j < at[q].size(); ++j)
      uf.unite(at[q][0].first, at[q][j].first, at[q][j].second - at[q][0].second);
  }

  // classify roots
  struct Comp {
    bool boundary = false;
    std::vector<std::pair<int, int64_t>> members;  // (node, find-offset)
  };
  std::map<int, Comp> comps;
  auto nodeBoundary = [&](int x) {
    if (x < (int)nA) return ab[x].has_top();
    return bb[x - nA].has_bottom();
  };
  for (int x = 0; x < (int)(nA + nB); ++x) {
    auto [r, d] = uf.find(x);
    auto& c = comps[r];
    c.members.push_back({x, d});
    if (nodeBoundary(x)) c.boundary = true;
  }

  int64_t betaExp = 0, newLoops = 0;
  std::vector<Block> out;
  for (auto& [root, comp] : comps) {
    int64_t g = uf.tor[root];
    if (!comp.boundary) {
      if (g == 0)
        ++betaExp;  // one contractible component orbit
      else
        ++newLoops;  // one non-contractible loop, regardless of net winding
      continue;
    }
    Block blk;
    blk.period = (int32_t)g;
    for (auto& [x, dx] : comp.members) {
      const Block& src = x < (int)nA ? ab[x] : bb[x - nA];
      bool fromA = x < (int)nA;
      for (auto& v : src.verts) {
        // keep boundary vertices only: top row of a, bottom row of b
        if (fromA && v.side != 1) continue;
        if (!fromA && v.side != 0) continue;
        int64_t c = (int64_t)v.copy - dx;  // member translate -dx holds copy-0 alignment
        if (g > 0) c = ((c % g) + g) % g;
        blk.verts.push_back({v.side, v.pos, (int32_t)c});
      }
    }
    if (blk.verts.empty()) {
      // boundary flag set but all boundary verts filtered: cannot happen
      throw std::logic_error("compose: empty boundary component");
    }
    out.push_back(std::move(blk));
  }

  ScaledElement r;
  r.diagram = canonicalize(resS, resT, a.loops() + b.loops() + newLoops, std::move(out));
  r.betaExp = betaExp;
  return r;
}

ScaledElement compose_reduced(const AffineDiagram& a, const AffineDiagram& b) {
  ScaledElement r = compose(a, b);
  r.alphaExp = r.diagram.loops();
  r.diagram = r.diagram.with_loops(0);
  return r;
}

AffineDiagram involute(const AffineDiagram& d) {
  std::vector<Block> blocks = d.blocks();
  for (auto& b : blocks)
    for (auto& v : b.verts) v.side = (int8_t)(1 - v.side);
  return canonicalize(d.top_arity(), d.bottom_arity(), d.loops(), std::move(blocks));
}

namespace {

// boundary order: bottom row left to right, then top row right to left
struct BoundaryKey {
  int which;   // 0 = bottom, 1 = top
  int64_t x;   // linear coordinate, negated for top
  bool operator<(const BoundaryKey& o) const {
    if (which != o.which) return which < o.which;
    return x < o.x;
  }
};

std::vector<BoundaryKey> boundary_keys(const Block& b, int64_t shift, int32_t s, int32_t t,
                                       int32_t lo, int32_t hi) {
  std::vector<BoundaryKey> ks;
  auto add = [&](const Vertex& v, int64_t c) {
    int64_t lin = v.pos + c * (v.side == 0 ? s : t);
    ks.push_back({v.side, v.side == 0 ? lin : -lin});
  };
  if (b.wrapping()) {
    for (auto& v : b.verts)
      for (int64_t c = lo; c <= hi; ++c)
        if (((c - v.copy - shift) % b.period + b.period) % b.period == 0) add(v, c);
  } else {
    for (auto& v : b.verts) add(v, v.copy + shift);
  }
  std::sort(ks.begin(), ks.end());
  return ks;
}

bool interleave(const std::vector<BoundaryKey>& p, const std::vector<BoundaryKey>& q) {
  // crossing iff labels alternate at least P Q P Q along the line
  std::vector<std::pair<BoundaryKey, int>> merged;
  for (auto& k : p) merged.push_back({k, 0});
  for (auto& k : q) merged.push_back({k, 1});
  std::sort(merged.begin(), merged.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  int runs = 0, last = -1;
  for (auto& [k, w] : merged)
    if (w != last) {
      ++runs;
      last = w;
    }
  return runs >= 4;
}

bool planar_impl(const AffineDiagram& d, int32_t pad) {
  bool through = d.through_count() > 0;
  if (d.loops() > 0 && through) return false;
  int32_t maxSpan = d.max_span();
  int32_t W = maxSpan + 1 + pad;
  int32_t lo = -W, hi = W - 1;  // 2*maxSpan+2 copies at pad = 0
  // collect block translates intersecting the window
  std::vector<std::pair<const Block*, int64_t>> trs;
  for (auto& b : d.blocks()) {
    if (b.wrapping()) {
      for (int64_t sh = 0; sh < b.period; ++sh) trs.push_back({&b, sh});
    } else {
      int32_t bmin = b.min_copy(), bmax = b.max_copy();
      for (int64_t sh = lo - bmax; sh <= hi - bmin; ++sh) trs.push_back({&b, sh});
    }
  }
  std::vector<std::vector<BoundaryKey>> keys;
  keys.reserve(trs.size());
  for (auto& [b, sh] : trs)
    keys.push_back(boundary_keys(*b, sh, d.bottom_arity(), d.top_arity(), lo, hi));
  for (size_t i = 0; i < keys.size(); ++i)
    for (size_t j = i + 1; j < keys.size(); ++j)
      if (interleave(keys[i], keys[j])) return false;
  return true;
}

}  // namespace

bool is_planar(const AffineDiagram& d) { return planar_impl(d, 0); }
bool is_planar(const AffineDiagram& d, int32_t window_pad) { return planar_impl(d, window_pad); }

bool even_test(const AffineDiagram& d) {
  if (d.bottom_arity() != d.top_arity())
    throw std::invalid_argument("even_test: arities differ");
  const int32_t m = d.bottom_arity();
  if (m == 0) return true;
  for (auto& b : d.blocks())
    if (b.wrapping() || b.verts.size() != 2)
      throw std::invalid_argument("even_test: diagram is not strand-only");
  int32_t R = d.max_span() + 2;
  for (int32_t l = 0; l < m; ++l) {
    int64_t crossings = d.loops();
    for (auto& b : d.blocks())
      for (int32_t sh = -R; sh <= R; ++sh) {
        int64_t x1 = b.verts[0].pos + (int64_t)(b.verts[0].copy + sh) * m;
        int64_t x2 = b.verts[1].pos + (int64_t)(b.verts[1].copy + sh) * m;
        if (x1 > x2) std::swap(x1, x2);
        if (x1 <= l && l < x2) ++crossings;
      }
    if (crossings % 2 != 0) return false;
  }
  return true;
}

AffineDiagram identity_diagram(int32_t m) {
  std::vector<Block> blocks;
  for (int32_t i = 0; i < m; ++i) blocks.push_back({0, {{0, i, 0}, {1, i, 0}}});
  return canonicalize(m, m, 0, std::move(blocks));
}

}  // namespace adm
