#include "adm/families.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace adm {

std::string FamilyId::str() const {
  std::string b;
  switch (base) {
    case Base::Pa: b = "Pa"; break;
    case Base::Br: b = "Br"; break;
    case Base::RoBr: b = "RoBr"; break;
    case Base::Ro: b = "Ro"; break;
    case Base::TL: b = "TL"; break;
    case Base::Mo: b = "Mo"; break;
    case Base::PRo: b = "PRo"; break;
  }
  switch (flavor) {
    case Flavor::AffineBar: return "a" + b + "-";
    case Flavor::AffineReduced: return "a" + b;
    case Flavor::PeriodicBar: return "p" + b + "-";
    case Flavor::PeriodicReduced: return "p" + b;
    case Flavor::RReduced: return b + "_r" + std::to_string(r);
    case Flavor::Ordinary: return b;
  }
  return b;
}

FamilyId parse_family(const std::string& name) {
  std::string s = name;
  FamilyId f{Base::Pa, Flavor::Ordinary, 0};
  auto rpos = s.find("_r");
  if (rpos != std::string::npos) {
    f.flavor = Flavor::RReduced;
    f.r = std::stoi(s.substr(rpos + 2));
    s = s.substr(0, rpos);
  } else if (!s.empty() && s[0] == 'a') {
    f.flavor = s.back() == '-' ? Flavor::AffineBar : Flavor::AffineReduced;
    s = s.substr(1);
  } else if (!s.empty() && s[0] == 'p' && s != "PRo" && s.rfind("Pa", 0) != 0) {
    f.flavor = s.back() == '-' ? Flavor::PeriodicBar : Flavor::PeriodicReduced;
    s = s.substr(1);
  }
  if (!s.empty() && s.back() == '-') s.pop_back();
  if (s == "Pa") f.base = Base::Pa;
  else if (s == "Br") f.base = Base::Br;
  else if (s == "RoBr") f.base = Base::RoBr;
  else if (s == "Ro") f.base = Base::Ro;
  else if (s == "TL") f.base = Base::TL;
  else if (s == "Mo") f.base = Base::Mo;
  else if (s == "PRo") f.base = Base::PRo;
  else throw std::invalid_argument("parse_family: unknown family " + name);
  if (f.flavor == Flavor::RReduced && !is_symmetric_base(f.base))
    throw std::invalid_argument("parse_family: r-reduced needs a symmetric base");
  return f;
}

bool is_planar_base(Base b) { return b == Base::TL || b == Base::Mo || b == Base::PRo; }
bool is_symmetric_base(Base b) {
  return b == Base::Pa || b == Base::Br || b == Base::RoBr || b == Base::Ro;
}

bool structural_member(const AffineDiagram& d, Base base) {
  for (auto& b : d.blocks()) {
    size_t sz = b.wrapping() ? SIZE_MAX : b.verts.size();
    switch (base) {
      case Base::Pa:
        break;
      case Base::Br:
      case Base::TL:
        if (sz != 2) return false;
        break;
      case Base::RoBr:
      case Base::Mo:
        if (sz > 2) return false;
        break;
      case Base::Ro:
      case Base::PRo:
        // size-2 blocks pair one bottom and one top vertex; singletons allowed
        if (sz > 2) return false;
        if (sz == 2 && b.verts[0].side == b.verts[1].side) return false;
        break;
    }
  }
  if (is_planar_base(base) && !is_planar(d)) return false;
  return true;
}

namespace {

// tau^d detection: all blocks are through strands with a common shift d
std::optional<int64_t> as_tau_power(const AffineDiagram& d) {
  if (d.bottom_arity() != d.top_arity() || d.loops() != 0) return std::nullopt;
  const int32_t m = d.bottom_arity();
  if (m == 0) return std::nullopt;
  std::optional<int64_t> shift;
  for (auto& b : d.blocks()) {
    if (b.wrapping() || b.verts.size() != 2) return std::nullopt;
    const Vertex *bot = nullptr, *top = nullptr;
    for (auto& v : b.verts) (v.side == 0 ? bot : top) = &v;
    if (!bot || !top) return std::nullopt;
    int64_t s = ((int64_t)top->pos + (int64_t)top->copy * m) -
                ((int64_t)bot->pos + (int64_t)bot->copy * m);
    if (shift && *shift != s) return std::nullopt;
    shift = s;
  }
  return shift;
}

const std::vector<AffineDiagram>* periodic_closure(Base base, int m, size_t cap, bool* capped);

}  // namespace

Membership in_family(const AffineDiagram& d, const FamilyId& family, int m, size_t closure_cap) {
  if (!structural_member(d, family.base)) return Membership::No;
  const bool loopFree = d.loops() == 0;
  switch (family.flavor) {
    case Flavor::Ordinary:
      if (!loopFree) return Membership::No;
      if (d.max_span() != 0 || d.has_wrapping()) return Membership::No;
      return Membership::Yes;
    case Flavor::RReduced: {
      if (!loopFree || d.has_wrapping()) return Membership::No;
      for (auto& b : d.blocks())
        if (b.span() > family.r - 1) return Membership::No;
      return Membership::Yes;
    }
    case Flavor::AffineBar:
      if ((family.base == Base::Ro || family.base == Base::PRo) && !loopFree)
        return Membership::No;
      return Membership::Yes;
    case Flavor::AffineReduced:
      return loopFree ? Membership::Yes : Membership::No;
    case Flavor::PeriodicBar:
    case Flavor::PeriodicReduced: {
      if (family.flavor == Flavor::PeriodicReduced && !loopFree) return Membership::No;
      if (family.base == Base::TL) {
        // intrinsic criterion: even diagrams, excluding nonzero even powers
        // of the global twist
        if (!even_test(d)) return Membership::No;
        auto p = as_tau_power(d);
        if (p && *p != 0) return Membership::No;
        return Membership::Yes;
      }
      bool capped = false;
      const auto* cl = periodic_closure(family.base, m, closure_cap, &capped);
      AffineDiagram probe = family.flavor == Flavor::PeriodicReduced ? d : d;
      for (auto& x : *cl)
        if (family.flavor == Flavor::PeriodicReduced
                ? (x.with_loops(0) == probe && true)
                : (x == probe))
          return Membership::Yes;
      return capped ? Membership::Undecided : Membership::No;
    }
  }
  return Membership::Undecided;
}

std::string GeneratorKind::str() const {
  switch (g) {
    case Gen::Identity: return "id";
    case Gen::S: return "s" + std::to_string(index);
    case Gen::E: return "e" + std::to_string(index);
    case Gen::P: return "p" + std::to_string(index);
    case Gen::PHalf: return "p" + std::to_string(index) + ".5";
    case Gen::L: return "l" + std::to_string(index);
    case Gen::R: return "r" + std::to_string(index);
    case Gen::T: return "t" + std::to_string(index);
    case Gen::Tau: return "tau";
    case Gen::TauInv: return "tau-";
  }
  return "?";
}

std::vector<Gen> legal_kinds(Base base) {
  switch (base) {
    case Base::Pa: return {Gen::S, Gen::P, Gen::PHalf, Gen::T, Gen::Tau, Gen::TauInv};
    case Base::Br: return {Gen::S, Gen::E, Gen::T, Gen::Tau, Gen::TauInv};
    case Base::RoBr: return {Gen::S, Gen::E, Gen::P, Gen::T, Gen::Tau, Gen::TauInv};
    case Base::Ro: return {Gen::S, Gen::P, Gen::T, Gen::Tau, Gen::TauInv};
    case Base::TL: return {Gen::E, Gen::Tau, Gen::TauInv};
    case Base::Mo: return {Gen::E, Gen::L, Gen::R, Gen::Tau, Gen::TauInv};
    case Base::PRo: return {Gen::L, Gen::R, Gen::Tau, Gen::TauInv};
  }
  return {};
}

AffineDiagram generator(const FamilyId& family, const GeneratorKind& kind, int m) {
  if (m <= 0) throw std::invalid_argument("generator: arity must be positive");
  if (kind.g != Gen::Identity) {
    auto legal = legal_kinds(family.base);
    if (std::find(legal.begin(), legal.end(), kind.g) == legal.end())
      throw std::invalid_argument("generator: kind not legal for family " + family.str());
  }
  auto throughAt = [&](int pos) { return Block{0, {{0, pos, 0}, {1, pos, 0}}}; };
  // pair positions for index i: 1-based vertices i, i+1
  int i = kind.index;
  int a = ((i - 1) % m + m) % m;
  int b = (a + 1) % m;
  int cb = (a + 1 == m) ? 1 : 0;  // copy of the second position
  std::vector<Block> blocks;
  auto others = [&](std::initializer_list<int> used) {
    for (int j = 0; j < m; ++j)
      if (std::find(used.begin(), used.end(), j) == used.end()) blocks.push_back(throughAt(j));
  };
  switch (kind.g) {
    case Gen::Identity:
      others({});
      break;
    case Gen::S:
      blocks.push_back({0, {{0, a, 0}, {1, b, cb}}});
      blocks.push_back({0, {{0, b, cb}, {1, a, 0}}});
      others({a, b});
      break;
    case Gen::E:
      blocks.push_back({0, {{1, a, 0}, {1, b, cb}}});
      blocks.push_back({0, {{0, a, 0}, {0, b, cb}}});
      others({a, b});
      break;
    case Gen::P:
      blocks.push_back({0, {{0, a, 0}}});
      blocks.push_back({0, {{1, a, 0}}});
      others({a});
      break;
    case Gen::PHalf:
      blocks.push_back({0, {{0, a, 0}, {0, b, cb}, {1, a, 0}, {1, b, cb}}});
      others({a, b});
      break;
    case Gen::L:
      blocks.push_back({0, {{0, a, 0}, {1, b, cb}}});
      blocks.push_back({0, {{1, a, 0}}});
      blocks.push_back({0, {{0, b, cb}}});
      others({a, b});
      break;
    case Gen::R:
      blocks.push_back({0, {{0, b, cb}, {1, a, 0}}});
      blocks.push_back({0, {{0, a, 0}}});
      blocks.push_back({0, {{1, b, cb}}});
      others({a, b});
      break;
    case Gen::T:
      blocks.push_back({0, {{0, a, 0}, {1, a, 1}}});
      others({a});
      break;
    case Gen::Tau:
      for (int j = 0; j < m; ++j)
        blocks.push_back({0, {{0, j, 0}, {1, (j + 1) % m, j + 1 == m ? 1 : 0}}});
      break;
    case Gen::TauInv:
      for (int j = 0; j < m; ++j)
        blocks.push_back({0, {{0, j, 0}, {1, (j + m - 1) % m, j == 0 ? -1 : 0}}});
      break;
  }
  return canonicalize(m, m, 0, std::move(blocks));
}

std::vector<std::pair<GeneratorKind, AffineDiagram>> family_generators(const FamilyId& family,
                                                                       int m) {
  std::vector<GeneratorKind> kinds;
  bool periodic =
      family.flavor == Flavor::PeriodicBar || family.flavor == Flavor::PeriodicReduced;
  bool affine = family.flavor == Flavor::AffineBar || family.flavor == Flavor::AffineReduced ||
                family.flavor == Flavor::RReduced;
  int lo = periodic ? 0 : 1;
  auto addIndexed = [&](Gen g, int from, int to) {
    for (int i = from; i <= to; ++i) kinds.push_back({g, i});
  };
  switch (family.base) {
    case Base::TL:
      addIndexed(Gen::E, lo, m - 1);
      break;
    case Base::Mo:
      addIndexed(Gen::E, lo, m - 1);
      addIndexed(Gen::L, lo, m - 1);
      addIndexed(Gen::R, lo, m - 1);
      break;
    case Base::PRo:
      addIndexed(Gen::L, lo, m - 1);
      addIndexed(Gen::R, lo, m - 1);
      break;
    case Base::Br:
      addIndexed(Gen::S, lo, m - 1);
      addIndexed(Gen::E, lo, m - 1);
      break;
    case Base::Ro:
      addIndexed(Gen::S, lo, m - 1);
      kinds.push_back({Gen::P, 1});
      break;
    case Base::RoBr:
      addIndexed(Gen::S, lo, m - 1);
      addIndexed(Gen::E, lo, m - 1);
      addIndexed(Gen::P, 1, periodic ? m : m);
      break;
    case Base::Pa:
      addIndexed(Gen::S, lo, m - 1);
      addIndexed(Gen::P, 1, m);
      addIndexed(Gen::PHalf, lo, m - 1);
      break;
  }
  if (affine) {
    kinds.push_back({Gen::Tau, 0});
    kinds.push_back({Gen::TauInv, 0});
    if (is_symmetric_base(family.base)) addIndexed(Gen::T, 1, m);
  }
  std::vector<std::pair<GeneratorKind, AffineDiagram>> out;
  for (auto& k : kinds) out.push_back({k, generator(family, k, m)});
  return out;
}

std::pair<std::vector<AffineDiagram>, bool> generated_closure(
    const std::vector<AffineDiagram>& gens, size_t size_cap) {
  std::set<AffineDiagram> known;
  std::deque<AffineDiagram> queue;
  if (!gens.empty()) {
    AffineDiagram id = identity_diagram(gens.front().bottom_arity());
    known.insert(id);
    queue.push_back(id);
  }
  bool capped = false;
  while (!queue.empty()) {
    AffineDiagram x = std::move(queue.front());
    queue.pop_front();
    for (auto& g : gens) {
      AffineDiagram y = compose(g, x).diagram;
      if (known.count(y)) continue;
      if (known.size() >= size_cap) {
        capped = true;
        continue;
      }
      known.insert(y);
      queue.push_back(y);
    }
  }
  return {std::vector<AffineDiagram>(known.begin(), known.end()), capped};
}

namespace {

const std::vector<AffineDiagram>* periodic_closure(Base base, int m, size_t cap, bool* capped) {
  struct Entry {
    std::vector<AffineDiagram> set;
    bool capped;
  };
  static std::map<std::tuple<int, int, size_t>, Entry> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple((int)base, m, cap);
  auto it = cache.find(key);
  if (it == cache.end()) {
    FamilyId f{base, Flavor::PeriodicBar, 0};
    std::vector<AffineDiagram> gens;
    for (auto& [k, d] : family_generators(f, m)) gens.push_back(d);
    auto [set, hit] = generated_closure(gens, cap);
    it = cache.emplace(key, Entry{std::move(set), hit}).first;
  }
  *capped = it->second.capped;
  return &it->second.set;
}

}  // namespace

}  // namespace adm
