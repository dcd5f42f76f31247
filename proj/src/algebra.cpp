#include "cra/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cra {

std::string AtomStructure::label(int a) const {
  if (a >= 0 && a < static_cast<int>(labels.size()) && !labels[a].empty()) return labels[a];
  return "a" + std::to_string(a);
}

Element FiniteRelationAlgebra::top() const {
  Element e(s.atom_count);
  e.set();
  return e;
}

Element FiniteRelationAlgebra::converse_of(const Element& e) const {
  Element out(s.atom_count);
  for (auto a = e.find_first(); a != Bits::npos; a = e.find_next(a))
    out.set(s.converse[a]);
  return out;
}

Element FiniteRelationAlgebra::compose(const Element& a, const Element& b) const {
  Element out(s.atom_count);
  for (auto i = a.find_first(); i != Bits::npos; i = a.find_next(i))
    for (auto j = b.find_first(); j != Bits::npos; j = b.find_next(j))
      out |= s.compose_atoms(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Element FiniteRelationAlgebra::complement(const Element& e) const { return ~e; }

int FiniteRelationAlgebra::atom_id(const AtomIndex& a) const {
  auto it = std::lower_bound(atom_meta.begin(), atom_meta.end(), a);
  if (it == atom_meta.end() || !(*it == a)) return -1;
  return static_cast<int>(it - atom_meta.begin());
}

FiniteRelationAlgebra build_full_algebra(const GroupTriple& t) {
  Report v = validate_triple(t);
  if (!v.ok()) throw InvalidTriple(v.to_string());
  GroupTriple canon = t;
  canon.pair = canonicalize(t.pair);

  FiniteRelationAlgebra a;
  a.atom_meta = all_atoms(canon.pair);
  const int n = static_cast<int>(a.atom_meta.size());
  a.s.atom_count = n;
  a.s.identity_atoms = Bits(n);
  a.s.converse.resize(n);
  a.s.labels.resize(n);
  a.s.compose.assign(static_cast<std::size_t>(n) * n, Bits(n));

  for (int i = 0; i < n; ++i) {
    const AtomIndex& ai = a.atom_meta[i];
    a.s.labels[i] = atom_label(ai);
    if (ai.x == ai.y && ai.alpha == 0) a.s.identity_atoms.set(i);
    a.s.converse[i] = a.atom_id(atom_converse(canon.pair, ai));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.atom_meta[i].y != a.atom_meta[j].x) continue;
      Bits& cell = a.s.compose[static_cast<std::size_t>(i) * n + j];
      for (const AtomIndex& c : atom_shifted_compose(canon, a.atom_meta[i], a.atom_meta[j]))
        cell.set(a.atom_id(c));
    }
  }
  return a;
}

FiniteRelationAlgebra complex_algebra(const FiniteGroup& g) {
  FiniteRelationAlgebra a;
  const int n = g.order;
  a.s.atom_count = n;
  a.s.identity_atoms = singleton(n, 0);
  a.s.converse = g.inv;
  a.s.labels.resize(n);
  a.s.compose.assign(static_cast<std::size_t>(n) * n, Bits(n));
  for (int i = 0; i < n; ++i) {
    a.s.labels[i] = "g" + std::to_string(i);
    for (int j = 0; j < n; ++j) a.s.compose[static_cast<std::size_t>(i) * n + j].set(g.op(i, j));
  }
  return a;
}

Report check_ra_axioms(const FiniteRelationAlgebra& a) {
  Report r;
  const int n = a.n();
  const auto& s = a.s;

  for (int i = 0; i < n; ++i) {
    if (s.converse[i] < 0 || s.converse[i] >= n) {
      r.fail("axiom-converse", s.label(i), "converse out of range");
      return r;
    }
    if (s.converse[s.converse[i]] != i)
      r.fail("axiom-converse", s.label(i),
             "converse is not an involution: goes to " + s.label(s.converse[i]) + " then " +
                 s.label(s.converse[s.converse[i]]));
  }

  if (s.identity_atoms.size() != static_cast<std::size_t>(n) || s.identity_atoms.none())
    r.fail("axiom-identity", "-", "no identity atoms");
  for (int i = 0; i < n; ++i) {
    Element left(n), right(n);
    for (auto e = s.identity_atoms.find_first(); e != Bits::npos;
         e = s.identity_atoms.find_next(e)) {
      left |= s.compose_atoms(static_cast<int>(e), i);
      right |= s.compose_atoms(i, static_cast<int>(e));
    }
    const Element self = singleton(n, i);
    if (left != self)
      r.fail("axiom-identity", s.label(i),
             "1';" + s.label(i) + " = " + set_to_string(left) + ", expected {" +
                 std::to_string(i) + "}");
    if (right != self)
      r.fail("axiom-identity", s.label(i),
             s.label(i) + ";1' = " + set_to_string(right) + ", expected {" + std::to_string(i) +
                 "}");
  }

  // Peircean cycle law.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Element& xy = s.compose_atoms(x, y);
      for (int z = 0; z < n; ++z) {
        const bool c1 = xy.test(z);
        const bool c2 = s.compose_atoms(s.converse[x], z).test(y);
        const bool c3 = s.compose_atoms(z, s.converse[y]).test(x);
        if (c1 != c2 || c1 != c3) {
          r.fail("axiom-cycle",
                 "(" + s.label(x) + "," + s.label(y) + "," + s.label(z) + ")",
                 "cycle law: " + std::to_string(c1) + "/" + std::to_string(c2) + "/" +
                     std::to_string(c3));
        }
      }
    }
  }

  // Converse distributes over composition (redundant given the cycle law,
  // kept as an independent cross-check of the table).
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Element lhs(n);
      const Element& xy = s.compose_atoms(x, y);
      for (auto c = xy.find_first(); c != Bits::npos; c = xy.find_next(c))
        lhs.set(s.converse[c]);
      if (lhs != s.compose_atoms(s.converse[y], s.converse[x]))
        r.fail("axiom-converse-compose", "(" + s.label(x) + "," + s.label(y) + ")",
               "(x;y)⁻ = " + set_to_string(lhs) + " != y⁻;x⁻ = " +
                   set_to_string(s.compose_atoms(s.converse[y], s.converse[x])));
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Element& xy = s.compose_atoms(x, y);
      for (int z = 0; z < n; ++z) {
        Element lhs(n), rhs(n);
        for (auto d = xy.find_first(); d != Bits::npos; d = xy.find_next(d))
          lhs |= s.compose_atoms(static_cast<int>(d), z);
        const Element& yz = s.compose_atoms(y, z);
        for (auto e = yz.find_first(); e != Bits::npos; e = yz.find_next(e))
          rhs |= s.compose_atoms(x, static_cast<int>(e));
        if (lhs != rhs)
          r.fail("axiom-associativity",
                 "(" + s.label(x) + "," + s.label(y) + "," + s.label(z) + ")",
                 "(x;y);z = " + set_to_string(lhs) + " != x;(y;z) = " + set_to_string(rhs));
      }
    }
  }
  return r;
}

bool is_simple_ra(const FiniteRelationAlgebra& a) {
  const Element top = a.top();
  for (int i = 0; i < a.n(); ++i)
    if (a.compose(a.compose(top, a.atom(i)), top) != top) return false;
  return true;
}

bool is_functional(const FiniteRelationAlgebra& a, const Element& f) {
  return a.compose(a.converse_of(f), f).is_subset_of(a.identity());
}

MeasurabilityReport measurability(const FiniteRelationAlgebra& a) {
  MeasurabilityReport rep;
  rep.measurable = true;
  const Element top = a.top();
  for (auto x = a.s.identity_atoms.find_first(); x != Bits::npos;
       x = a.s.identity_atoms.find_next(x)) {
    AtomMeasure m;
    m.atom = static_cast<int>(x);
    const Element sq = a.compose(a.compose(a.atom(m.atom), top), a.atom(m.atom));

    // Every functional element is a union of functional atoms, so the square
    // is a sum of functional elements iff the functional atoms below it
    // cover it.
    std::vector<int> fatoms;
    Element covered = a.zero();
    for (auto i = sq.find_first(); i != Bits::npos; i = sq.find_next(i)) {
      if (is_functional(a, a.atom(static_cast<int>(i)))) {
        fatoms.push_back(static_cast<int>(i));
        covered.set(i);
      }
    }
    m.measurable = covered == sq;

    // Non-zero functional elements below the square are exactly the unions
    // of pairwise compatible functional atoms (compatible: a⁻;b ≤ 1').
    const int k = static_cast<int>(fatoms.size());
    if (k <= 20) {
      std::vector<Bits> compat(k, Bits(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (a.s.compose_atoms(a.s.converse[fatoms[i]], fatoms[j])
                  .is_subset_of(a.s.identity_atoms))
            compat[i].set(j);
      // DFS over cliques: each clique extends by compatible atoms of larger
      // index only, so every clique is counted exactly once.
      std::uint64_t count = 0;
      auto extend = [&](auto&& self, int last, const Bits& allowed) -> void {
        for (auto j = allowed.find_first(); j != Bits::npos; j = allowed.find_next(j)) {
          if (static_cast<int>(j) <= last) continue;
          ++count;
          self(self, static_cast<int>(j), allowed & compat[j]);
        }
      };
      Bits all(k);
      all.set();
      extend(extend, -1, all);
      m.measure = count;
      m.exact = true;
    } else {
      m.measure = static_cast<std::uint64_t>(k);
      m.exact = false;
    }

    rep.measurable = rep.measurable && m.measurable;
    rep.per_atom.push_back(m);
  }
  return rep;
}

std::vector<int> atoms_below(const FiniteRelationAlgebra& a, const Element& e) {
  std::vector<int> out;
  (void)a;
  for (auto i = e.find_first(); i != Bits::npos; i = e.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

std::string dump_atom_structure(const FiniteRelationAlgebra& a) {
  std::ostringstream os;
  os << "cra-atoms 1\n";
  os << "atom-count " << a.n() << "\n";
  for (int i = 0; i < a.n(); ++i) os << "atom " << i << " " << a.s.label(i) << "\n";
  os << "identity";
  for (auto i = a.s.identity_atoms.find_first(); i != Bits::npos;
       i = a.s.identity_atoms.find_next(i))
    os << " " << i;
  os << "\n";
  os << "converse";
  for (int i = 0; i < a.n(); ++i) os << " " << a.s.converse[i];
  os << "\n";
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      const Element& c = a.s.compose_atoms(i, j);
      if (c.none()) continue;
      os << "compose " << i << " " << j << " :";
      for (auto k = c.find_first(); k != Bits::npos; k = c.find_next(k)) os << " " << k;
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

}  // namespace cra
