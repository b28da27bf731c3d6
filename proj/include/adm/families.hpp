#pragma once

// Diagram families (partition, Brauer, rook-Brauer, rook, Temperley-Lieb,
// Motzkin, planar rook) in their affine, reduced affine, periodic, reduced
// periodic, r-reduced and ordinary flavors, plus the standard generators.

#include <optional>
#include <string>
#include <vector>

#include "adm/diagram.hpp"

namespace adm {

enum class Base { Pa, Br, RoBr, Ro, TL, Mo, PRo };

enum class Flavor {
  AffineBar,        // loops tracked on the diagram
  AffineReduced,    // loops removed with alpha
  PeriodicBar,
  PeriodicReduced,
  RReduced,         // finite-winding quotient, symmetric bases only
  Ordinary,
};

struct FamilyId {
  Base base;
  Flavor flavor;
  int r = 0;  // RReduced only
  std::string str() const;
};

FamilyId parse_family(const std::string& name);  // e.g. "aTL-", "aBr", "pTL", "Br_r2", "TL"

bool is_planar_base(Base b);     // TL, Mo, PRo
bool is_symmetric_base(Base b);  // Pa, Br, RoBr, Ro

enum class Membership { Yes, No, Undecided };

// Structural block-shape test for the base alone (sizes, rook pairing,
// planarity where required); ignores loops and flavor.
bool structural_member(const AffineDiagram& d, Base base);

// Full membership predicate. Periodic flavors other than TL are decided by
// bounded closure over the periodic generator set and may return Undecided
// at the size cap.
Membership in_family(const AffineDiagram& d, const FamilyId& family, int m,
                     size_t closure_cap = 20000);

enum class Gen { Identity, S, E, P, PHalf, L, R, T, Tau, TauInv };

struct GeneratorKind {
  Gen g;
  int index = 0;  // 1-based where applicable; 0 allowed for periodic variants
  std::string str() const;
};

// The pictured generator diagram at arity m. Indices are interpreted mod m.
// Throws if the kind is not legal for the family's base.
AffineDiagram generator(const FamilyId& family, const GeneratorKind& kind, int m);

// Generator kinds legal for a base.
std::vector<Gen> legal_kinds(Base base);

// Generating set of the monoid at arity m for the given family (used for
// closure tests and fusion pipelines).
std::vector<std::pair<GeneratorKind, AffineDiagram>> family_generators(const FamilyId& family,
                                                                       int m);

// BFS closure of a generating set under compose (diagram part only; loop
// counts kept). Returns the set and whether the size cap was hit.
std::pair<std::vector<AffineDiagram>, bool> generated_closure(
    const std::vector<AffineDiagram>& gens, size_t size_cap);

}  // namespace adm
