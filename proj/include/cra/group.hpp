#pragma once

#include <string>
#include <vector>

#include "cra/bits.hpp"
#include "cra/error.hpp"

namespace cra {

// A finite group given by its full multiplication table. Elements are dense
// indices 0..order-1 and the identity is always element 0; make_group relabels
// the input table if necessary so this holds.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // row-major: table[a*order+b] = a∘b
  std::vector<int> inv;    // two-sided inverses

  static constexpr int identity = 0;

  int op(int a, int b) const { return table[a * order + b]; }
  int inverse(int a) const { return inv[a]; }

  Bits full_set() const {
    Bits b(order);
    b.set();
    return b;
  }
  Bits trivial_subgroup() const { return singleton(order, 0); }
};

// Validates the table (closure, associativity, identity, inverses) and
// relabels so the identity is element 0. Throws NotAGroup on any violation.
FiniteGroup make_group(const std::vector<std::vector<int>>& table);

// Z_n, addition mod n.
FiniteGroup cyclic(int n);

// Direct product; element a*|B|+b is the pair (a, b).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Smallest subgroup containing gens (closure under product and inverse).
Bits subgroup_generated(const FiniteGroup& g, const Bits& gens);

bool is_subgroup(const FiniteGroup& g, const Bits& h);

// True iff gHg^-1 = H for all g. Throws NotASubgroup when H is not a subgroup.
bool is_normal(const FiniteGroup& g, const Bits& h);

// Setwise product {s∘t : s in S, t in T}.
Bits complex_product(const FiniteGroup& g, const Bits& s, const Bits& t);

// {s^-1 : s in S}.
Bits set_inverse(const FiniteGroup& g, const Bits& s);

// a∘H.
Bits left_coset(const FiniteGroup& g, int a, const Bits& h);

// Left cosets of a subgroup, deterministically ordered: the subgroup itself
// first, the remainder sorted by minimal member.
struct CosetList {
  Bits subgroup;
  std::vector<Bits> cosets;
  std::vector<int> index_of;  // element -> position of its coset

  int count() const { return static_cast<int>(cosets.size()); }
};

CosetList cosets(const FiniteGroup& g, const Bits& h);  // throws NotASubgroup

// Quotient of g by a normal subgroup. Elements of the quotient group are the
// coset positions of cosets(g, h), so the quotient identity is element 0.
struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // element of g -> coset position
};

Quotient quotient(const FiniteGroup& g, const Bits& h);  // throws NotNormal

}  // namespace cra
