#pragma once

#include "cra/algebra.hpp"

namespace cra {

// The Lyndon algebra of a finite line with n points: atoms are the identity
// (id 0) and the points p_0..p_{n-1} (ids 1..n). Converse is the identity
// permutation and the product of two points is
//   p;q = all points except p and q   when p != q,
//   p;p = p + identity,
//   p;identity = identity;p = p.
// Throws InvalidSize when n < 1.
FiniteRelationAlgebra lyndon_algebra(int n);

}  // namespace cra
