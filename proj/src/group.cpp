#include "cra/group.hpp"

#include <algorithm>
#include <numeric>

namespace cra {

namespace {

// Relabels the table by the permutation perm (new index of old element a is
// perm[a]).
std::vector<int> relabel(const std::vector<int>& table, int n, const std::vector<int>& perm) {
  std::vector<int> out(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[perm[a] * n + perm[b]] = perm[table[a * n + b]];
  return out;
}

}  // namespace

FiniteGroup make_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  std::vector<int> flat(n * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw NotAGroup("table is not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) throw NotAGroup("entry out of range");
      flat[a * n + b] = v;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]])
          throw NotAGroup("not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = flat[cand * n + a] == a && flat[a * n + cand] == a;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw NotAGroup("no two-sided identity");

  if (e != 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);
    flat = relabel(flat, n, perm);
  }

  FiniteGroup g;
  g.order = n;
  g.table = std::move(flat);
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.table[a * n + b] == 0 && g.table[b * n + a] == 0) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0) throw NotAGroup("no inverse for element " + std::to_string(a));
  }
  return g;
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw NotAGroup("cyclic group order must be positive");
  FiniteGroup g;
  g.order = n;
  g.table.resize(n * n);
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  FiniteGroup g;
  g.order = n;
  g.table.resize(n * n);
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) {
    const int ia = i / b.order, ib = i % b.order;
    g.inv[i] = a.inverse(ia) * b.order + b.inverse(ib);
    for (int j = 0; j < n; ++j) {
      const int ja = j / b.order, jb = j % b.order;
      g.table[i * n + j] = a.op(ia, ja) * b.order + b.op(ib, jb);
    }
  }
  return g;
}

Bits subgroup_generated(const FiniteGroup& g, const Bits& gens) {
  Bits h(g.order);
  h.set(0);
  std::vector<int> queue;
  queue.push_back(0);
  for (auto i = gens.find_first(); i != Bits::npos; i = gens.find_next(i)) {
    if (i >= static_cast<std::size_t>(g.order)) throw IndexOutOfRange("generator");
    if (!h.test(i)) {
      h.set(i);
      queue.push_back(static_cast<int>(i));
    }
  }
  // Closure under product; inverses follow from finiteness.
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int a = queue[q];
    for (std::size_t r = 0; r < queue.size(); ++r) {
      for (int p : {g.op(a, queue[r]), g.op(queue[r], a)}) {
        if (!h.test(p)) {
          h.set(p);
          queue.push_back(p);
        }
      }
    }
  }
  return h;
}

bool is_subgroup(const FiniteGroup& g, const Bits& h) {
  if (h.size() != static_cast<std::size_t>(g.order)) return false;
  if (!h.test(0)) return false;
  for (auto a = h.find_first(); a != Bits::npos; a = h.find_next(a))
    for (auto b = h.find_first(); b != Bits::npos; b = h.find_next(b))
      if (!h.test(g.op(static_cast<int>(a), static_cast<int>(b)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Bits& h) {
  if (!is_subgroup(g, h)) throw NotASubgroup(set_to_string(h));
  for (int a = 0; a < g.order; ++a) {
    Bits conj(g.order);
    for (auto x = h.find_first(); x != Bits::npos; x = h.find_next(x))
      conj.set(g.op(g.op(a, static_cast<int>(x)), g.inverse(a)));
    if (conj != h) return false;
  }
  return true;
}

Bits complex_product(const FiniteGroup& g, const Bits& s, const Bits& t) {
  Bits out(g.order);
  for (auto a = s.find_first(); a != Bits::npos; a = s.find_next(a))
    for (auto b = t.find_first(); b != Bits::npos; b = t.find_next(b))
      out.set(g.op(static_cast<int>(a), static_cast<int>(b)));
  return out;
}

Bits set_inverse(const FiniteGroup& g, const Bits& s) {
  Bits out(g.order);
  for (auto a = s.find_first(); a != Bits::npos; a = s.find_next(a))
    out.set(g.inverse(static_cast<int>(a)));
  return out;
}

Bits left_coset(const FiniteGroup& g, int a, const Bits& h) {
  Bits out(g.order);
  for (auto x = h.find_first(); x != Bits::npos; x = h.find_next(x))
    out.set(g.op(a, static_cast<int>(x)));
  return out;
}

CosetList cosets(const FiniteGroup& g, const Bits& h) {
  if (!is_subgroup(g, h)) throw NotASubgroup(set_to_string(h));
  CosetList out;
  out.subgroup = h;
  out.index_of.assign(g.order, -1);
  out.cosets.push_back(h);
  for (auto x = h.find_first(); x != Bits::npos; x = h.find_next(x))
    out.index_of[x] = 0;
  // Remaining cosets in order of their minimal member.
  for (int a = 0; a < g.order; ++a) {
    if (out.index_of[a] >= 0) continue;
    const int idx = static_cast<int>(out.cosets.size());
    Bits c = left_coset(g, a, h);
    for (auto x = c.find_first(); x != Bits::npos; x = c.find_next(x))
      out.index_of[x] = idx;
    out.cosets.push_back(std::move(c));
  }
  return out;
}

Quotient quotient(const FiniteGroup& g, const Bits& h) {
  if (!is_subgroup(g, h)) throw NotASubgroup(set_to_string(h));
  if (!is_normal(g, h)) throw NotNormal(set_to_string(h));
  const CosetList cl = cosets(g, h);
  const int m = cl.count();
  std::vector<int> reps(m);
  for (int i = 0; i < m; ++i) reps[i] = static_cast<int>(cl.cosets[i].find_first());

  Quotient q;
  q.group.order = m;
  q.group.table.resize(m * m);
  q.group.inv.resize(m);
  for (int i = 0; i < m; ++i) {
    q.group.inv[i] = cl.index_of[g.inverse(reps[i])];
    for (int j = 0; j < m; ++j) q.group.table[i * m + j] = cl.index_of[g.op(reps[i], reps[j])];
  }
  q.projection = cl.index_of;
  return q;
}

}  // namespace cra
