#include "adm/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace adm {

std::vector<AffineDiagram> enumerate_diagrams(const EnumSpec& spec) {
  std::vector<Vertex> order;
  for (int32_t p = 0; p < spec.s; ++p) order.push_back({0, p, 0});
  for (int32_t p = 0; p < spec.t; ++p) order.push_back({1, p, 0});

  struct Open {
    std::vector<Vertex> verts;  // with chosen copies
    int32_t cmin = 0, cmax = 0;
  };
  std::vector<Open> blocks;
  std::vector<AffineDiagram> out;
  size_t candidates = 0;

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == order.size()) {
      if (++candidates > spec.cap) throw std::runtime_error("enumerate: resource cap exceeded");
      std::vector<Block> raw;
      for (auto& ob : blocks) raw.push_back({0, ob.verts});
      AffineDiagram d = canonicalize(spec.s, spec.t, 0, std::move(raw));
      if (spec.throughCount && d.through_count() != *spec.throughCount) return;
      if (spec.planarOnly && !is_planar(d)) return;
      if (spec.predicate && !spec.predicate(d)) return;
      out.push_back(std::move(d));
      return;
    }
    Vertex v = order[idx];
    // join an existing block
    for (size_t j = 0; j < blocks.size(); ++j) {
      auto& ob = blocks[j];
      if (spec.maxBlockSize && ob.verts.size() >= spec.maxBlockSize) continue;
      if (spec.rookPairing) {
        if (ob.verts.size() >= 2) continue;
        if (ob.verts[0].side == v.side) continue;
      }
      for (int c = -spec.maxDisp; c <= spec.maxDisp; ++c) {
        int32_t nmin = std::min(ob.cmin, c), nmax = std::max(ob.cmax, c);
        if (nmax - nmin > spec.maxDisp) continue;
        auto save = ob;
        ob.verts.push_back({v.side, v.pos, c});
        ob.cmin = nmin;
        ob.cmax = nmax;
        rec(idx + 1);
        ob = save;
      }
    }
    // open a new block anchored at copy 0
    blocks.push_back({{{v.side, v.pos, 0}}, 0, 0});
    rec(idx + 1);
    blocks.pop_back();
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EnumSpec enum_spec_for(Base base, int32_t s, int32_t t, int maxDisp) {
  EnumSpec sp;
  sp.s = s;
  sp.t = t;
  sp.maxDisp = maxDisp;
  switch (base) {
    case Base::Pa: break;
    case Base::Br:
    case Base::TL: sp.maxBlockSize = 2; break;  // singletons rejected by a through filter later
    case Base::RoBr:
    case Base::Mo: sp.maxBlockSize = 2; break;
    case Base::Ro:
    case Base::PRo:
      sp.maxBlockSize = 2;
      sp.rookPairing = true;
      break;
  }
  sp.planarOnly = is_planar_base(base);
  return sp;
}

}  // namespace adm
