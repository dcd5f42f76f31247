#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cra/algebra.hpp"

namespace cra {

// A monomorphism of finite atomic relation algebras, given by the images of
// the source atoms. Images are non-zero, pairwise disjoint target elements;
// the union-lifted map sends the source identity to the target identity and
// preserves converse and composition. It need not cover the target.
struct Embedding {
  FiniteRelationAlgebra source;
  FiniteRelationAlgebra target;
  std::vector<Element> map;  // source atom id -> target element

  Element image_of(const Element& e) const;
};

enum class EmbedStatus { Found, NoEmbedding, NotFoundWithinBudget };

struct EmbeddingResult {
  EmbedStatus status = EmbedStatus::NoEmbedding;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;  // candidate assignments examined
};

// Backtracking search for an embedding of source into target. Source atoms
// are processed most-constrained first (descending composition degree);
// candidate images are enumerated by ascending atom count. Deterministic.
// NoEmbedding is returned only when the whole search space was exhausted.
EmbeddingResult find_embedding(const FiniteRelationAlgebra& source,
                               const FiniteRelationAlgebra& target, std::uint64_t budget);

// Atom-level verification of all embedding laws (complete for union-lifted
// maps by distributivity).
Report verify_embedding(const Embedding& e);

// Additionally replays every pair of source elements through the lifted map.
// Intended for sources with at most 2^12 elements.
Report verify_embedding_exhaustive(const Embedding& e);

// Atom pairs on which shifted and ordinary composition disagree, lex order.
std::vector<std::pair<AtomIndex, AtomIndex>> compare_compositions(const GroupTriple& t);

// The partition induced by a point p of an embedded Lyndon algebra: indices
// x, y are equivalent when the whole block G_x x G_y lies below the image of
// p + identity. The relation is verified to be an equivalence on its domain;
// violations are reported as internal-consistency failures.
struct PointPartition {
  int point_atom = 0;                     // source atom id of the point
  std::vector<std::vector<int>> classes;  // sorted classes of sorted indices
  std::vector<int> domain;                // indices related to at least one index
  Report consistency;
};

PointPartition point_partition(const Embedding& emb, const GroupTriple& t, int point_atom);

struct TrivialityReport {
  bool all_h_trivial = false;
  bool all_atoms_functional = false;
  bool all_shifts_trivial = false;
  std::vector<std::pair<int, int>> nontrivial_h;  // edges with H_xy != {e}
  std::vector<AtomIndex> non_functional_atoms;
  Report invariant;  // hard check: all_h_trivial implies all_atoms_functional
};

// Reports subgroup triviality, atom functionality and shift triviality of a
// validated triple whose built algebra passes the axioms.
TrivialityReport triviality_analysis(const GroupTriple& t);

struct ShiftAssignment {
  std::map<std::array<int, 3>, Bits> shifts;
  bool trivial = false;  // every shift is the subgroup itself
};

struct ShiftSearchResult {
  std::vector<ShiftAssignment> passing;  // assignments whose algebra passes the axioms
  std::uint64_t tested = 0;
  bool budget_exceeded = false;
};

// Enumerates all shift systems over the cosets of H_xy∘H_xz (triples in lex
// order, cosets in canonical order), builds each algebra and keeps the
// axiom-passing assignments. Stops after `budget` assignments, flagging the
// result partial.
ShiftSearchResult search_shift_systems(const GroupPair& p, std::uint64_t budget);

// On a triple whose built algebra passes the axioms, every shift C_xyx must
// equal H_xy. Pass/fail per edge with witnesses.
Report verify_coset_consequences(const GroupTriple& t);

}  // namespace cra
