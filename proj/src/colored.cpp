#include "adm/colored.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace adm {

namespace {

void require_colorable(const AffineDiagram& d, const char* who) {
  if (d.loops() != 0) throw std::invalid_argument(std::string(who) + ": loops present");
  if (d.has_wrapping()) throw std::invalid_argument(std::string(who) + ": wrapping block");
}

}  // namespace

ColoredDiagram to_colored(const AffineDiagram& d) {
  require_colorable(d, "to_colored");
  ColoredDiagram cd;
  cd.s = d.bottom_arity();
  cd.t = d.top_arity();
  for (auto& b : d.blocks()) {
    std::vector<Vertex> vs = b.verts;
    std::sort(vs.begin(), vs.end(), [](const Vertex& x, const Vertex& y) {
      if (x.side != y.side) return x.side < y.side;
      return x.pos < y.pos;
    });
    for (size_t i = 1; i < vs.size(); ++i)
      if (vs[i].side == vs[i - 1].side && vs[i].pos == vs[i - 1].pos)
        throw std::logic_error("to_colored: block repeats a fundamental position");
    ColoredBlock cb;
    int32_t anchor = vs.front().copy;
    for (auto& v : vs) cb.verts.push_back({v.side, v.pos, v.copy - anchor});
    cd.blocks.push_back(std::move(cb));
  }
  std::sort(cd.blocks.begin(), cd.blocks.end());
  return cd;
}

AffineDiagram from_colored(const ColoredDiagram& cd) {
  std::vector<Block> blocks;
  for (auto& cb : cd.blocks) {
    Block b;
    for (auto& [side, pos, disp] : cb.verts) b.verts.push_back({side, pos, disp});
    blocks.push_back(std::move(b));
  }
  return canonicalize(cd.s, cd.t, 0, std::move(blocks));
}

ColoredDiagram colored_tensor(const ColoredDiagram& f, const ColoredDiagram& g) {
  ColoredDiagram r;
  r.s = f.s + g.s;
  r.t = f.t + g.t;
  r.blocks = f.blocks;
  for (auto& cb : g.blocks) {
    ColoredBlock shifted = cb;
    for (auto& [side, pos, disp] : shifted.verts) pos += (side == 0 ? f.s : f.t);
    r.blocks.push_back(std::move(shifted));
  }
  std::sort(r.blocks.begin(), r.blocks.end());
  return r;
}

ColoredCompose compose_colored(const ColoredDiagram& a, const ColoredDiagram& b) {
  if (a.s != b.t) throw std::invalid_argument("compose_colored: arity mismatch");
  const int32_t m = a.s;
  // plain weighted union-find over fundamental middle positions plus block ids
  const size_t nA = a.blocks.size(), nB = b.blocks.size();
  std::vector<int> par(nA + nB);
  std::vector<int64_t> off(nA + nB, 0);
  std::vector<int64_t> tor(nA + nB, 0);
  std::iota(par.begin(), par.end(), 0);
  std::function<std::pair<int, int64_t>(int)> find = [&](int x) -> std::pair<int, int64_t> {
    if (par[x] == x) return {x, 0};
    auto [r, d] = find(par[x]);
    par[x] = r;
    off[x] += d;
    return {r, off[x]};
  };
  auto unite = [&](int x, int y, int64_t d) {
    auto [rx, dx] = find(x);
    auto [ry, dy] = find(y);
    if (rx == ry) {
      int64_t delta = std::abs(d + dy - dx);
      if (delta) tor[rx] = std::gcd(tor[rx], delta);
      return;
    }
    par[rx] = ry;
    off[rx] = d + dy - dx;
    tor[ry] = std::gcd(tor[ry], tor[rx]);
  };
  std::vector<std::vector<std::pair<int, int64_t>>> at(m);
  for (size_t i = 0; i < nA; ++i)
    for (auto& [side, pos, disp] : a.blocks[i].verts)
      if (side == 0) at[pos].push_back({(int)i, -(int64_t)disp});
  for (size_t i = 0; i < nB; ++i)
    for (auto& [side, pos, disp] : b.blocks[i].verts)
      if (side == 1) at[pos].push_back({(int)(nA + i), -(int64_t)disp});
  for (int32_t q = 0; q < m; ++q)
    for (size_t j = 1; j < at[q].size(); ++j)
      unite(at[q][0].first, at[q][j].first, at[q][j].second - at[q][0].second);

  struct Acc {
    bool boundary = false;
    std::vector<std::tuple<int8_t, int32_t, int64_t>> verts;
    int64_t torsion = 0;
  };
  std::map<int, Acc> comps;
  for (int x = 0; x < (int)(nA + nB); ++x) {
    auto [r, dx] = find(x);
    auto& acc = comps[r];
    acc.torsion = tor[r];
    const ColoredBlock& src = x < (int)nA ? a.blocks[x] : b.blocks[x - nA];
    bool fromA = x < (int)nA;
    for (auto& [side, pos, disp] : src.verts) {
      if (fromA && side == 1) {
        acc.verts.push_back({1, pos, disp - dx});
        acc.boundary = true;
      } else if (!fromA && side == 0) {
        acc.verts.push_back({0, pos, disp - dx});
        acc.boundary = true;
      }
    }
  }
  ColoredCompose out;
  out.diagram.s = b.s;
  out.diagram.t = a.t;
  for (auto& [root, acc] : comps) {
    if (!acc.boundary) {
      if (acc.torsion == 0)
        ++out.betaExp;
      else
        ++out.alphaExp;
      continue;
    }
    std::sort(acc.verts.begin(), acc.verts.end(), [](auto& x, auto& y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
      return std::get<1>(x) < std::get<1>(y);
    });
    ColoredBlock cb;
    int64_t anchor = std::get<2>(acc.verts.front());
    for (auto& [side, pos, disp] : acc.verts)
      cb.verts.push_back({side, pos, (int32_t)(disp - anchor)});
    out.diagram.blocks.push_back(std::move(cb));
  }
  std::sort(out.diagram.blocks.begin(), out.diagram.blocks.end());
  return out;
}

WindingNormalForm winding_normal_form(const AffineDiagram& d) {
  require_colorable(d, "winding_normal_form");
  WindingNormalForm nf;
  nf.leftExps.assign(d.top_arity(), 0);
  nf.rightExps.assign(d.bottom_arity(), 0);
  std::vector<Block> ordinary;
  for (auto& b : d.blocks()) {
    // anchor: minimal bottom vertex if the block has one, else minimal vertex
    std::vector<Vertex> vs = b.verts;
    std::sort(vs.begin(), vs.end(), [](const Vertex& x, const Vertex& y) {
      if (x.side != y.side) return x.side < y.side;
      return x.pos < y.pos;
    });
    int32_t anchor = vs.front().copy;  // bottom-first sort puts a bottom vertex first if any
    Block ob;
    for (auto& v : vs) {
      int64_t disp = v.copy - anchor;
      if (v.side == 1)
        nf.leftExps[v.pos] = disp;  // t_i adds +1 to the top vertex at its position
      else
        nf.rightExps[v.pos] = -disp;  // right t_j subtracts 1 from the bottom vertex
      ob.verts.push_back({v.side, v.pos, 0});
    }
    ordinary.push_back(std::move(ob));
  }
  nf.ordinary = canonicalize(d.bottom_arity(), d.top_arity(), 0, std::move(ordinary));
  return nf;
}

}  // namespace adm
