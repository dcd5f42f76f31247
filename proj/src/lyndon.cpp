#include "cra/lyndon.hpp"

namespace cra {

FiniteRelationAlgebra lyndon_algebra(int n) {
  if (n < 1) throw InvalidSize("a line needs at least one point");
  FiniteRelationAlgebra a;
  const int m = n + 1;  // identity + n points
  a.s.atom_count = m;
  a.s.identity_atoms = singleton(m, 0);
  a.s.converse.resize(m);
  for (int i = 0; i < m; ++i) a.s.converse[i] = i;
  a.s.labels.resize(m);
  a.s.labels[0] = "1'";
  for (int i = 1; i < m; ++i) a.s.labels[i] = "p" + std::to_string(i - 1);

  a.s.compose.assign(static_cast<std::size_t>(m) * m, Bits(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Bits& cell = a.s.compose[static_cast<std::size_t>(i) * m + j];
      if (i == 0) {
        cell.set(j);
      } else if (j == 0) {
        cell.set(i);
      } else if (i == j) {
        cell.set(0);
        cell.set(i);
      } else {
        for (int k = 1; k < m; ++k)
          if (k != i && k != j) cell.set(k);
      }
    }
  }
  return a;
}

}  // namespace cra
