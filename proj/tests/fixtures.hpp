#pragma once

#include <string>
#include <vector>

#include "cra/pair.hpp"

namespace cra::fixtures {

// Non-cyclic groups used across the suites.
FiniteGroup s3();        // symmetric group on three letters
FiniteGroup d4();        // dihedral group of order 8
FiniteGroup q8();        // quaternion group
FiniteGroup v4();        // Z2 x Z2
FiniteGroup z2xz4();

// Single-group triple with the identity automorphism and identity shifts.
GroupTriple single(const FiniteGroup& g);

// Two groups, E universal, one iso (0 -> 1) from generator data; diagonals
// and the reverse orientation are derived. Identity shifts.
GroupTriple two_group(const FiniteGroup& g0, const FiniteGroup& g1, std::vector<int> h_gens,
                      std::vector<std::pair<int, int>> rep01);

// Three groups, E universal, isos (0,1), (0,2), (1,2) from generator data.
struct IsoData {
  std::vector<int> h_gens;
  std::vector<std::pair<int, int>> rep_map;
};
GroupTriple three_group(const FiniteGroup& g0, const FiniteGroup& g1, const FiniteGroup& g2,
                        const IsoData& i01, const IsoData& i02, const IsoData& i12);

GroupTriple f1();  // single Z2
GroupTriple f2();  // single Z4
GroupTriple t1();  // three Z4 blocks with kappa 2, 4, 2 off-diagonal

// Deliberately broken fixtures.
GroupTriple b1();          // t1 with H_12 = {0} and H_02 = Z4: composition-subset failure
GroupTriple b2();          // three full Z4 isos with one negated leg: induced-map failure
GroupTriple f1_shifted();  // f1 with the nontrivial shift C = {1}

struct NamedTriple {
  std::string name;
  GroupTriple triple;
};

// The generated corpus of valid triples (identity shifts, group order <= 16,
// at most three groups). Deterministic order and content.
std::vector<NamedTriple> corpus();

}  // namespace cra::fixtures
