#pragma once

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cra/group.hpp"
#include "cra/report.hpp"

namespace cra {

// An isomorphism phi : G_x/H -> G_y/K between quotients of two groups,
// stored as a bijection of coset positions over the canonical enumerations
// cosets(gx, H) and cosets(gy, K). map[0] = 0 and map respects the quotient
// multiplication; both are enforced at construction.
struct QuotientIso {
  int source = 0;
  int target = 0;
  Bits H;
  Bits K;
  std::vector<int> map;  // canonical H-coset position -> canonical K-coset position
};

// Builds a quotient isomorphism from generator data: H = <h_gens> and rep_map
// entries (a, b) declaring phi(a∘H) = b∘K. K and the full coset map are
// derived by closing the generated graph subgroup; throws NotAQuotientIso
// when the data do not determine an isomorphism of quotients.
QuotientIso make_quotient_iso(const FiniteGroup& gx, const FiniteGroup& gy, int x, int y,
                              const Bits& h_gens,
                              const std::vector<std::pair<int, int>>& rep_map);

// The identity automorphism of G_x/{e}.
QuotientIso identity_iso(const FiniteGroup& g, int x);

// The inverse isomorphism G_y/K -> G_x/H of a given iso G_x/H -> G_y/K.
QuotientIso inverse_iso(const QuotientIso& iso);

// Validates subgroup normality, bijectivity, map[0]=0 and multiplicativity.
// Throws NotAQuotientIso on violation.
void validate_quotient_iso(const FiniteGroup& gx, const FiniteGroup& gy, const QuotientIso& iso);

// Fully materialized coset data of one edge (x, y): the chosen enumeration
// <H_g : g < kappa> of the cosets of H in G_x (h_cosets[0] = H) and the
// associated enumeration of the cosets of K in G_y, k_cosets[g] = phi[H_g].
// The isomorphism is thus position-aligned: H_g corresponds to K_g.
struct CosetSystem {
  int x = 0;
  int y = 0;
  Bits H;
  Bits K;
  std::vector<Bits> h_cosets;
  std::vector<Bits> k_cosets;
  std::vector<int> h_index_of;  // element of G_x -> position of its H-coset
  std::vector<int> k_index_of;  // element of G_y -> position of its K-coset

  int kappa() const { return static_cast<int>(h_cosets.size()); }
  void rebuild_indexes(int gx_order, int gy_order);
};

// Groups indexed by 0..|I|-1, an equivalence relation E of index pairs, and
// one coset system per pair of E.
struct GroupPair {
  std::vector<FiniteGroup> groups;
  std::set<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, CosetSystem> systems;
  bool canonical = false;

  int index_count() const { return static_cast<int>(groups.size()); }
  const FiniteGroup& group(int x) const { return groups.at(x); }
  bool has_edge(int x, int y) const { return edges.count({x, y}) != 0; }
  const CosetSystem& system(int x, int y) const { return systems.at({x, y}); }
};

// Assembles a pair from groups, edges and one iso per edge; validates that E
// is an equivalence relation, that each iso connects the right groups, and
// all QuotientIso invariants. Coset enumerations start out canonical.
GroupPair make_group_pair(std::vector<FiniteGroup> groups, std::set<std::pair<int, int>> edges,
                          const std::vector<QuotientIso>& isos);

// Re-orders coset enumerations so that for every edge pair the reverse
// orientation enumerates H_yx as the associated K-system of the (lex smaller)
// master orientation: H_yx[g] = K_xy[g]. Requires H_yx = K_xy as sets and
// throws ConventionUnsatisfiable otherwise. Idempotent.
GroupPair canonicalize(GroupPair p);

// E reflexive, symmetric, transitive (re-checkable on hand-built pairs).
Report check_equivalence(const GroupPair& p);

// For each x: H_xx = K_xx = {e} and phi_xx is the identity automorphism.
Report check_identity_condition(const GroupPair& p);

// For each (x,y): phi_yx is the inverse of phi_xy, checked set-wise through
// the coset enumerations.
Report check_converse_condition(const GroupPair& p);

// For each composable (x,y,z): the subset condition
// H_xz <= phi_xy^-1[K_xy ∘ H_yz] and the agreement of the maps induced by
// phi_xy; phi_yz and by phi_xz on the quotient modulo phi_xy^-1[K_xy ∘ H_yz].
Report check_composition_condition(const GroupPair& p);

// The three image equations phi_xy[H_xy∘H_xz] = K_xy∘H_yz,
// phi_yz[K_xy∘H_yz] = K_xz∘K_yz, phi_xz[H_xy∘H_xz] = K_xz∘K_yz. Must pass
// whenever the three closure conditions pass; a failure indicates a bug.
Report check_image_equations(const GroupPair& p);

// Image of a union of H-cosets under the edge isomorphism, as a subset of
// G_y. Precondition: s is exactly a union of cosets of sys.H.
Bits iso_image(const CosetSystem& sys, const Bits& s);
// Preimage of a union of K-cosets, as a subset of G_x.
Bits iso_preimage(const CosetSystem& sys, const Bits& s);

// Composable index triples {(x,y,z) : (x,y) in E and (y,z) in E}, lex order.
std::vector<std::array<int, 3>> composable_triples(const GroupPair& p);

// A group pair plus a shift system: for each composable triple (x,y,z) a
// coset of H_xy∘H_xz in G_x used to shift relative multiplication.
struct GroupTriple {
  GroupPair pair;
  std::map<std::array<int, 3>, Bits> shifts;
};

// The unshifted triple: every shift is the subgroup H_xy∘H_xz itself.
GroupTriple with_identity_shifts(GroupPair p);

// Every composable triple carries a shift and each shift is a coset of
// H_xy∘H_xz; notes (not failures) every nontrivial shift.
Report validate_shifts(const GroupTriple& t);

// Runs canonicalization and all condition checks in order; convention
// violations are reported as converse-condition failures.
Report validate_triple(const GroupTriple& t);

// Disjoint union of two triples; indices of b are relabeled past a's.
GroupTriple direct_product(const GroupTriple& a, const GroupTriple& b);

bool is_simple_triple(const GroupTriple& t);

std::string pair_key(int x, int y);
std::string triple_key(int x, int y, int z);

}  // namespace cra
