#include "fixtures.hpp"

#include <algorithm>
#include <array>

namespace cra::fixtures {

FiniteGroup s3() {
  // Permutations of {0,1,2} in lexicographic order; the identity comes first.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(c);
    }
  return make_group(table);
}

FiniteGroup d4() {
  // 0..3 rotations, 4..7 reflections.
  const int n = 4;
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      if (x < n && y < n)
        table[x][y] = (x + y) % n;
      else if (x < n)
        table[x][y] = (y + x - n) % n + n;
      else if (y < n)
        table[x][y] = (x - n - y + n) % n + n;
      else
        table[x][y] = (x - y + n) % n;
    }
  return make_group(table);
}

FiniteGroup q8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto unit = [](int e) { return e / 2; };  // 0:1, 1:i, 2:j, 3:k
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  auto encode = [](int u, int s) { return u * 2 + (s == 1 ? 0 : 1); };
  // unit products with signs: prod[u][v] = (unit, sign)
  static const int pu[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int ps[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      table[a][b] =
          encode(pu[unit(a)][unit(b)], sign(a) * sign(b) * ps[unit(a)][unit(b)]);
  return make_group(table);
}

FiniteGroup v4() { return direct_product(cyclic(2), cyclic(2)); }

FiniteGroup z2xz4() { return direct_product(cyclic(2), cyclic(4)); }

GroupTriple single(const FiniteGroup& g) {
  GroupPair p = make_group_pair({g}, {{0, 0}}, {identity_iso(g, 0)});
  return with_identity_shifts(canonicalize(std::move(p)));
}

GroupTriple two_group(const FiniteGroup& g0, const FiniteGroup& g1, std::vector<int> h_gens,
                      std::vector<std::pair<int, int>> rep01) {
  Bits gens(g0.order);
  for (int g : h_gens) gens.set(g);
  const QuotientIso iso01 = make_quotient_iso(g0, g1, 0, 1, gens, rep01);
  GroupPair p = make_group_pair({g0, g1}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                                {identity_iso(g0, 0), iso01, inverse_iso(iso01),
                                 identity_iso(g1, 1)});
  return with_identity_shifts(canonicalize(std::move(p)));
}

GroupTriple three_group(const FiniteGroup& g0, const FiniteGroup& g1, const FiniteGroup& g2,
                        const IsoData& i01, const IsoData& i02, const IsoData& i12) {
  auto mk = [](const FiniteGroup& ga, const FiniteGroup& gb, int a, int b, const IsoData& d) {
    Bits gens(ga.order);
    for (int g : d.h_gens) gens.set(g);
    return make_quotient_iso(ga, gb, a, b, gens, d.rep_map);
  };
  const QuotientIso iso01 = mk(g0, g1, 0, 1, i01);
  const QuotientIso iso02 = mk(g0, g2, 0, 2, i02);
  const QuotientIso iso12 = mk(g1, g2, 1, 2, i12);
  std::set<std::pair<int, int>> edges;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) edges.insert({x, y});
  GroupPair p = make_group_pair(
      {g0, g1, g2}, std::move(edges),
      {identity_iso(g0, 0), iso01, iso02, inverse_iso(iso01), identity_iso(g1, 1), iso12,
       inverse_iso(iso02), inverse_iso(iso12), identity_iso(g2, 2)});
  return with_identity_shifts(canonicalize(std::move(p)));
}

GroupTriple f1() { return single(cyclic(2)); }

GroupTriple f2() { return single(cyclic(4)); }

GroupTriple t1() {
  return three_group(cyclic(4), cyclic(4), cyclic(4), {{2}, {{1, 1}}}, {{}, {{1, 1}}},
                     {{2}, {{1, 1}}});
}

GroupTriple b1() {
  return three_group(cyclic(4), cyclic(4), cyclic(4), {{2}, {{1, 1}}}, {{1}, {{0, 1}}},
                     {{}, {{1, 1}}});
}

GroupTriple b2() {
  return three_group(cyclic(4), cyclic(4), cyclic(4), {{}, {{1, 1}}}, {{}, {{1, 3}}},
                     {{}, {{1, 1}}});
}

GroupTriple f1_shifted() {
  GroupTriple t = f1();
  t.shifts[{0, 0, 0}] = singleton(2, 1);
  return t;
}

std::vector<NamedTriple> corpus() {
  std::vector<NamedTriple> out;
  auto add = [&](std::string name, GroupTriple t) {
    out.push_back({std::move(name), std::move(t)});
  };

  add("Z1", single(cyclic(1)));
  add("Z2", f1());
  add("Z3", single(cyclic(3)));
  add("Z4", f2());
  add("Z6", single(cyclic(6)));
  add("Z8", single(cyclic(8)));
  add("Z12", single(cyclic(12)));
  add("Z16", single(cyclic(16)));
  add("S3", single(s3()));
  add("D4", single(d4()));
  add("Q8", single(q8()));
  add("V4", single(v4()));
  add("Z2xZ4", single(z2xz4()));
  add("Z3xZ3", single(direct_product(cyclic(3), cyclic(3))));

  add("Z4~Z4-full", two_group(cyclic(4), cyclic(4), {}, {{1, 1}}));
  add("Z4~Z4-neg", two_group(cyclic(4), cyclic(4), {}, {{1, 3}}));
  add("Z4~Z4-half", two_group(cyclic(4), cyclic(4), {2}, {{1, 1}}));
  add("Z8~Z4-neg", two_group(cyclic(8), cyclic(4), {4}, {{1, 3}}));
  add("S3~S3-conj", two_group(s3(), s3(), {}, {{1, 1}, {3, 4}}));
  add("Z4~Z2", two_group(cyclic(4), cyclic(2), {2}, {{1, 1}}));
  add("Z8~Z4", two_group(cyclic(8), cyclic(4), {4}, {{1, 1}}));
  add("Z8~Z2", two_group(cyclic(8), cyclic(2), {2}, {{1, 1}}));
  add("Z6~Z3", two_group(cyclic(6), cyclic(3), {3}, {{1, 1}}));
  add("Z6~Z2", two_group(cyclic(6), cyclic(2), {2}, {{1, 1}}));
  add("Z9~Z3", two_group(cyclic(9), cyclic(3), {3}, {{1, 1}}));
  add("Z12~Z4", two_group(cyclic(12), cyclic(4), {4}, {{1, 1}}));
  add("Z16~Z4", two_group(cyclic(16), cyclic(4), {4}, {{1, 1}}));
  add("S3~Z2", two_group(s3(), cyclic(2), {3}, {{1, 1}}));
  add("Q8~V4", two_group(q8(), v4(), {1}, {{2, 2}, {4, 1}}));
  add("Z2xZ4~Z4", two_group(z2xz4(), cyclic(4), {4}, {{1, 1}}));

  add("T1", t1());
  add("Z4-Z2-V4/Z2", three_group(cyclic(4), cyclic(2), v4(), {{2}, {{1, 1}}},
                                 {{2}, {{1, 2}, {0, 1}}}, {{}, {{1, 2}, {0, 1}}}));
  add("Z4-Z8-Z16/Z4", three_group(cyclic(4), cyclic(8), cyclic(16), {{}, {{1, 1}}},
                                  {{}, {{1, 1}}}, {{4}, {{1, 1}}}));
  add("Z2-Z3-Z4/Z1", three_group(cyclic(2), cyclic(3), cyclic(4), {{1}, {{1, 1}}},
                                 {{1}, {{1, 1}}}, {{1}, {{1, 1}}}));
  add("Z8-Z4-Z2/Z2", three_group(cyclic(8), cyclic(4), cyclic(2), {{2}, {{1, 1}}},
                                 {{2}, {{1, 1}}}, {{2}, {{1, 1}}}));

  add("Z2+Z2", direct_product(f1(), f1()));
  add("Z2+Z4", direct_product(f1(), f2()));
  add("Z4~Z4-half+Z2", direct_product(two_group(cyclic(4), cyclic(4), {2}, {{1, 1}}), f1()));

  return out;
}

}  // namespace cra::fixtures
