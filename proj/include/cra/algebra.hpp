#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cra/relations.hpp"

namespace cra {

// Elements of a finite atomic relation algebra are sets of atom ids.
using Element = Bits;

// The atoms of a finite atomic relation algebra: identity-atom set, converse
// permutation and atom-level composition. The whole algebra is determined by
// this table; elements are unions of atoms.
struct AtomStructure {
  int atom_count = 0;
  Bits identity_atoms;
  std::vector<int> converse;
  std::vector<Element> compose;  // row-major atom_count x atom_count
  std::vector<std::string> labels;

  const Element& compose_atoms(int a, int b) const { return compose[a * atom_count + b]; }
  std::string label(int a) const;
};

struct FiniteRelationAlgebra {
  AtomStructure s;
  // Provenance when built from a group triple: the (x, y, alpha) of each atom
  // id. Empty for other constructions.
  std::vector<AtomIndex> atom_meta;

  int n() const { return s.atom_count; }
  Element zero() const { return Element(s.atom_count); }
  Element top() const;
  Element identity() const { return s.identity_atoms; }
  Element atom(int a) const { return singleton(s.atom_count, a); }

  Element converse_of(const Element& e) const;
  Element compose(const Element& a, const Element& b) const;
  Element complement(const Element& e) const;

  // Atom id of a given block index; -1 when absent.
  int atom_id(const AtomIndex& a) const;
};

// Assembles the full algebra of a validated triple: atoms are all (x, y,
// alpha) in lexicographic order, converse comes from atom_converse,
// composition from atom_shifted_compose, identity atoms are the (x, x, 0).
// The construction does not guarantee the relation-algebra laws; run
// check_ra_axioms. Throws InvalidTriple when validate_triple fails.
FiniteRelationAlgebra build_full_algebra(const GroupTriple& t);

// The complex algebra of a group: one atom per element, converse = group
// inverse, composition = group product, identity atom = {e}. Built directly,
// independent of the triple machinery.
FiniteRelationAlgebra complex_algebra(const FiniteGroup& g);

// Relation-algebra laws at atom level: converse involution, identity law,
// the Peircean cycle law, converse distribution over composition, and atom
// associativity. For finite atomic algebras this is equivalent to the
// equational axioms. Failures carry witnessing atoms.
Report check_ra_axioms(const FiniteRelationAlgebra& a);

// 1;a;1 = 1 for every atom a.
bool is_simple_ra(const FiniteRelationAlgebra& a);

// f^-1;f below the identity element.
bool is_functional(const FiniteRelationAlgebra& a, const Element& f);

struct AtomMeasure {
  int atom = 0;
  bool measurable = false;
  std::uint64_t measure = 0;
  bool exact = true;  // false when counting was restricted to functional atoms
};

struct MeasurabilityReport {
  bool measurable = false;
  std::vector<AtomMeasure> per_atom;  // one record per subidentity atom
};

// For each subidentity atom x: whether the square x;1;x is a sum of
// functional elements, and the number of non-zero functional elements below
// the square. Exact counting enumerates unions of functional atoms (every
// functional element is such a union) and is capped at 2^20 candidate
// subsets; beyond the cap only the functional atoms themselves are counted
// and the record is flagged inexact.
MeasurabilityReport measurability(const FiniteRelationAlgebra& a);

std::vector<int> atoms_below(const FiniteRelationAlgebra& a, const Element& e);

// Record-format serialization of the atom structure (see README).
std::string dump_atom_structure(const FiniteRelationAlgebra& a);

}  // namespace cra
