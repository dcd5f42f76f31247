#include "cra/pair.hpp"

#include <algorithm>
#include <sstream>

namespace cra {

std::string pair_key(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string triple_key(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

QuotientIso make_quotient_iso(const FiniteGroup& gx, const FiniteGroup& gy, int x, int y,
                              const Bits& h_gens, const std::vector<std::pair<int, int>>& rep_map) {
  Bits gens = h_gens;
  gens.resize(gx.order);
  const Bits h = subgroup_generated(gx, gens);
  if (!is_normal(gx, h)) throw NotAQuotientIso("H = " + set_to_string(h) + " is not normal");
  const CosetList hc = cosets(gx, h);
  const int kappa = hc.count();

  // Close the graph subgroup of (G_x/H) x G_y generated by the rep pairs.
  // Its fiber over the identity coset is K; the remaining fibers are the
  // K-cosets assigned to each H-coset.
  for (auto& [a, b] : rep_map) {
    if (a < 0 || a >= gx.order) throw NotAQuotientIso("source representative out of range");
    if (b < 0 || b >= gy.order) throw NotAQuotientIso("target representative out of range");
  }
  std::vector<Bits> fibers(kappa, Bits(gy.order));
  fibers[0].set(0);
  std::vector<std::pair<int, int>> queue = {{0, 0}};  // (coset position, element of G_y)
  auto add = [&](int c, int b) {
    if (!fibers[c].test(b)) {
      fibers[c].set(b);
      queue.emplace_back(c, b);
    }
  };
  for (auto& [a, b] : rep_map) add(hc.index_of[a], b);
  const Quotient qx = quotient(gx, h);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [c1, b1] = queue[i];
    add(qx.group.inverse(c1), gy.inverse(b1));
    for (std::size_t j = 0; j < queue.size(); ++j) {
      auto [c2, b2] = queue[j];
      add(qx.group.op(c1, c2), gy.op(b1, b2));
      add(qx.group.op(c2, c1), gy.op(b2, b1));
    }
  }

  for (int c = 0; c < kappa; ++c)
    if (fibers[c].none())
      throw NotAQuotientIso("map is underdetermined: no image for coset " +
                            set_to_string(hc.cosets[c]));

  const Bits k = fibers[0];
  if (!is_subgroup(gy, k)) throw NotAQuotientIso("derived K = " + set_to_string(k) + " is not a subgroup");
  if (!is_normal(gy, k)) throw NotAQuotientIso("derived K = " + set_to_string(k) + " is not normal");
  Bits covered(gy.order);
  for (int c = 0; c < kappa; ++c) {
    if (fibers[c].count() != k.count())
      throw NotAQuotientIso("map is not single-valued on coset " + set_to_string(hc.cosets[c]));
    if ((fibers[c] & covered).any())
      throw NotAQuotientIso("map is not injective: overlapping images");
    covered |= fibers[c];
  }
  if (!covered.all())
    throw NotAQuotientIso("map is not surjective: " + set_to_string(~covered) + " not covered");

  const CosetList kc = cosets(gy, k);
  QuotientIso iso;
  iso.source = x;
  iso.target = y;
  iso.H = h;
  iso.K = k;
  iso.map.resize(kappa);
  for (int c = 0; c < kappa; ++c) iso.map[c] = kc.index_of[fibers[c].find_first()];
  validate_quotient_iso(gx, gy, iso);
  return iso;
}

QuotientIso identity_iso(const FiniteGroup& g, int x) {
  QuotientIso iso;
  iso.source = x;
  iso.target = x;
  iso.H = g.trivial_subgroup();
  iso.K = g.trivial_subgroup();
  iso.map.resize(g.order);
  for (int i = 0; i < g.order; ++i) iso.map[i] = i;
  return iso;
}

QuotientIso inverse_iso(const QuotientIso& iso) {
  QuotientIso out;
  out.source = iso.target;
  out.target = iso.source;
  out.H = iso.K;
  out.K = iso.H;
  out.map.assign(iso.map.size(), -1);
  for (int c = 0; c < static_cast<int>(iso.map.size()); ++c) out.map[iso.map[c]] = c;
  return out;
}

void validate_quotient_iso(const FiniteGroup& gx, const FiniteGroup& gy, const QuotientIso& iso) {
  if (!is_normal(gx, iso.H)) throw NotAQuotientIso("H is not normal");
  if (!is_normal(gy, iso.K)) throw NotAQuotientIso("K is not normal");
  const Quotient qx = quotient(gx, iso.H);
  const Quotient qy = quotient(gy, iso.K);
  const int kappa = qx.group.order;
  if (qy.group.order != kappa)
    throw NotAQuotientIso("quotients have different orders");
  if (static_cast<int>(iso.map.size()) != kappa) throw NotAQuotientIso("map has wrong length");
  Bits seen(kappa);
  for (int c = 0; c < kappa; ++c) {
    if (iso.map[c] < 0 || iso.map[c] >= kappa) throw NotAQuotientIso("map entry out of range");
    if (seen.test(iso.map[c])) throw NotAQuotientIso("map is not a bijection");
    seen.set(iso.map[c]);
  }
  if (iso.map[0] != 0) throw NotAQuotientIso("identity coset does not map to identity coset");
  for (int c = 0; c < kappa; ++c)
    for (int d = 0; d < kappa; ++d)
      if (iso.map[qx.group.op(c, d)] != qy.group.op(iso.map[c], iso.map[d]))
        throw NotAQuotientIso("map is not multiplicative at cosets (" + std::to_string(c) + "," +
                              std::to_string(d) + ")");
}

void CosetSystem::rebuild_indexes(int gx_order, int gy_order) {
  h_index_of.assign(gx_order, -1);
  k_index_of.assign(gy_order, -1);
  for (int g = 0; g < kappa(); ++g) {
    for (auto e = h_cosets[g].find_first(); e != Bits::npos; e = h_cosets[g].find_next(e))
      h_index_of[e] = g;
    for (auto e = k_cosets[g].find_first(); e != Bits::npos; e = k_cosets[g].find_next(e))
      k_index_of[e] = g;
  }
}

namespace {

CosetSystem materialize(const FiniteGroup& gx, const FiniteGroup& gy, const QuotientIso& iso) {
  const CosetList hc = cosets(gx, iso.H);
  const CosetList kc = cosets(gy, iso.K);
  CosetSystem sys;
  sys.x = iso.source;
  sys.y = iso.target;
  sys.H = iso.H;
  sys.K = iso.K;
  sys.h_cosets = hc.cosets;
  sys.k_cosets.resize(hc.count());
  for (int g = 0; g < hc.count(); ++g) sys.k_cosets[g] = kc.cosets[iso.map[g]];
  sys.rebuild_indexes(gx.order, gy.order);
  return sys;
}

}  // namespace

GroupPair make_group_pair(std::vector<FiniteGroup> groups, std::set<std::pair<int, int>> edges,
                          const std::vector<QuotientIso>& isos) {
  GroupPair p;
  p.groups = std::move(groups);
  p.edges = std::move(edges);
  const int m = p.index_count();
  for (auto& [x, y] : p.edges)
    if (x < 0 || x >= m || y < 0 || y >= m) throw IndexOutOfRange("edge " + pair_key(x, y));
  Report eq = check_equivalence(p);
  if (!eq.ok()) throw InvalidTriple("E is not an equivalence relation: " + eq.to_string());

  for (const auto& iso : isos) {
    const auto key = std::make_pair(iso.source, iso.target);
    if (!p.has_edge(iso.source, iso.target))
      throw InvalidTriple("iso given for " + pair_key(iso.source, iso.target) +
                          " which is not in E");
    if (p.systems.count(key))
      throw InvalidTriple("duplicate iso for " + pair_key(iso.source, iso.target));
    validate_quotient_iso(p.group(iso.source), p.group(iso.target), iso);
    p.systems.emplace(key, materialize(p.group(iso.source), p.group(iso.target), iso));
  }
  for (auto& [x, y] : p.edges)
    if (!p.systems.count({x, y}))
      throw InvalidTriple("no iso given for pair " + pair_key(x, y));
  return p;
}

Report check_equivalence(const GroupPair& p) {
  Report r;
  const int m = p.index_count();
  for (int x = 0; x < m; ++x)
    if (!p.has_edge(x, x)) r.fail("equivalence", pair_key(x, x), "E is not reflexive");
  for (auto& [x, y] : p.edges) {
    if (!p.has_edge(y, x))
      r.fail("equivalence", pair_key(x, y), "E is not symmetric: " + pair_key(y, x) + " missing");
    for (auto& [y2, z] : p.edges)
      if (y2 == y && !p.has_edge(x, z))
        r.fail("equivalence", triple_key(x, y, z),
               "E is not transitive: " + pair_key(x, z) + " missing");
  }
  return r;
}

GroupPair canonicalize(GroupPair p) {
  for (auto& [key, sys] : p.systems) {
    auto [x, y] = key;
    if (x == y) {
      if (sys.H != sys.K)
        throw ConventionUnsatisfiable("H" + pair_key(x, x) + " = " + set_to_string(sys.H) +
                                      " differs from K" + pair_key(x, x) + " = " +
                                      set_to_string(sys.K));
      continue;
    }
    if (x > y) continue;  // (x, y) with x < y is the master orientation
    if (!p.systems.count({y, x})) continue;  // asymmetric E is caught elsewhere
    CosetSystem& rev = p.systems.at({y, x});
    if (rev.H != sys.K)
      throw ConventionUnsatisfiable("H" + pair_key(y, x) + " = " + set_to_string(rev.H) +
                                    " differs from K" + pair_key(x, y) + " = " +
                                    set_to_string(sys.K));
    // Re-enumerate the (y, x) cosets so position g holds K_xy[g].
    std::vector<Bits> new_h(sys.kappa()), new_k(sys.kappa());
    for (int g = 0; g < sys.kappa(); ++g) {
      const Bits& target = sys.k_cosets[g];
      const int old_pos = rev.h_index_of[target.find_first()];
      new_h[g] = rev.h_cosets[old_pos];
      new_k[g] = rev.k_cosets[old_pos];
    }
    rev.h_cosets = std::move(new_h);
    rev.k_cosets = std::move(new_k);
    rev.rebuild_indexes(p.group(y).order, p.group(x).order);
  }
  p.canonical = true;
  return p;
}

Report check_identity_condition(const GroupPair& p) {
  Report r;
  for (int x = 0; x < p.index_count(); ++x) {
    if (!p.has_edge(x, x)) {
      r.fail("identity", pair_key(x, x), "missing diagonal edge");
      continue;
    }
    const CosetSystem& sys = p.system(x, x);
    const Bits trivial = p.group(x).trivial_subgroup();
    if (sys.H != trivial) {
      r.fail("identity", "x=" + std::to_string(x),
             "H = " + set_to_string(sys.H) + " is not the trivial subgroup");
      continue;
    }
    if (sys.K != trivial) {
      r.fail("identity", "x=" + std::to_string(x),
             "K = " + set_to_string(sys.K) + " is not the trivial subgroup");
      continue;
    }
    for (int g = 0; g < sys.kappa(); ++g) {
      if (sys.k_cosets[g] != sys.h_cosets[g]) {
        r.fail("identity", "x=" + std::to_string(x),
               "phi maps " + set_to_string(sys.h_cosets[g]) + " to " +
                   set_to_string(sys.k_cosets[g]) + ", not the identity automorphism");
        break;
      }
    }
  }
  return r;
}

Report check_converse_condition(const GroupPair& p) {
  Report r;
  for (auto& [x, y] : p.edges) {
    if (!p.has_edge(y, x)) {
      r.fail("converse", pair_key(x, y), "reverse pair missing from E");
      continue;
    }
    const CosetSystem& fwd = p.system(x, y);
    const CosetSystem& rev = p.system(y, x);
    if (rev.H != fwd.K) {
      r.fail("converse", pair_key(x, y),
             "H" + pair_key(y, x) + " = " + set_to_string(rev.H) + " differs from K" +
                 pair_key(x, y) + " = " + set_to_string(fwd.K));
      continue;
    }
    for (int g = 0; g < fwd.kappa(); ++g) {
      // Follow H_xy[g] through phi_xy then phi_yx; it must come back.
      const int pos = rev.h_index_of[fwd.k_cosets[g].find_first()];
      if (rev.k_cosets[pos] != fwd.h_cosets[g]) {
        r.fail("converse", pair_key(x, y),
               "phi" + pair_key(y, x) + " maps " + set_to_string(fwd.k_cosets[g]) + " to " +
                   set_to_string(rev.k_cosets[pos]) + ", not back to " +
                   set_to_string(fwd.h_cosets[g]));
        break;
      }
    }
  }
  return r;
}

Bits iso_image(const CosetSystem& sys, const Bits& s) {
  Bits out(sys.k_cosets.empty() ? 0 : sys.k_cosets[0].size());
  std::size_t covered = 0;
  for (int g = 0; g < sys.kappa(); ++g) {
    if (sys.h_cosets[g].is_subset_of(s)) {
      out |= sys.k_cosets[g];
      covered += sys.h_cosets[g].count();
    }
  }
  if (covered != s.count())
    throw Error("iso_image: " + set_to_string(s) + " is not a union of cosets of " +
                set_to_string(sys.H));
  return out;
}

Bits iso_preimage(const CosetSystem& sys, const Bits& s) {
  Bits out(sys.h_cosets.empty() ? 0 : sys.h_cosets[0].size());
  std::size_t covered = 0;
  for (int g = 0; g < sys.kappa(); ++g) {
    if (sys.k_cosets[g].is_subset_of(s)) {
      out |= sys.h_cosets[g];
      covered += sys.k_cosets[g].count();
    }
  }
  if (covered != s.count())
    throw Error("iso_preimage: " + set_to_string(s) + " is not a union of cosets of " +
                set_to_string(sys.K));
  return out;
}

std::vector<std::array<int, 3>> composable_triples(const GroupPair& p) {
  std::vector<std::array<int, 3>> out;
  for (auto& [x, y] : p.edges)
    for (auto& [y2, z] : p.edges)
      if (y2 == y) out.push_back({x, y, z});
  std::sort(out.begin(), out.end());
  return out;
}

Report check_composition_condition(const GroupPair& p) {
  Report r;
  for (auto& [x, y, z] : composable_triples(p)) {
    if (!p.has_edge(x, z)) {
      r.fail("composition-subset", triple_key(x, y, z), "pair " + pair_key(x, z) + " not in E");
      continue;
    }
    const CosetSystem& sxy = p.system(x, y);
    const CosetSystem& syz = p.system(y, z);
    const CosetSystem& sxz = p.system(x, z);
    const FiniteGroup& gx = p.group(x);
    const FiniteGroup& gy = p.group(y);

    const Bits ny = complex_product(gy, sxy.K, syz.H);
    const Bits nx = iso_preimage(sxy, ny);
    if (!sxz.H.is_subset_of(nx)) {
      r.fail("composition-subset", triple_key(x, y, z),
             "H" + pair_key(x, z) + "=" + set_to_string(sxz.H) + " is not a subset of " +
                 set_to_string(nx));
      continue;
    }

    // Compare the two induced maps on G_x/nx, one representative per coset.
    Bits seen(gx.order);
    bool bad = false;
    for (int a = 0; a < gx.order && !bad; ++a) {
      if (seen.test(a)) continue;
      seen |= left_coset(gx, a, nx);
      const int b = static_cast<int>(sxy.k_cosets[sxy.h_index_of[a]].find_first());
      const Bits via_y = iso_image(syz, left_coset(gy, b, ny));
      const Bits direct = iso_image(sxz, left_coset(gx, a, nx));
      if (via_y != direct) {
        r.fail("composition-induced", triple_key(x, y, z),
               "coset of " + std::to_string(a) + ": through y gives " + set_to_string(via_y) +
                   ", directly " + set_to_string(direct));
        bad = true;
      }
    }
  }
  return r;
}

Report check_image_equations(const GroupPair& p) {
  Report r;
  for (auto& [x, y, z] : composable_triples(p)) {
    if (!p.has_edge(x, z)) continue;  // composition check reports this
    const CosetSystem& sxy = p.system(x, y);
    const CosetSystem& syz = p.system(y, z);
    const CosetSystem& sxz = p.system(x, z);

    const Bits hh = complex_product(p.group(x), sxy.H, sxz.H);
    const Bits kh = complex_product(p.group(y), sxy.K, syz.H);
    const Bits kk = complex_product(p.group(z), sxz.K, syz.K);
    try {
      if (iso_image(sxy, hh) != kh)
        r.fail("image", triple_key(x, y, z),
               "phi" + pair_key(x, y) + "[H∘H] = " + set_to_string(iso_image(sxy, hh)) +
                   " != " + set_to_string(kh));
      if (iso_image(syz, kh) != kk)
        r.fail("image", triple_key(x, y, z),
               "phi" + pair_key(y, z) + "[K∘H] = " + set_to_string(iso_image(syz, kh)) +
                   " != " + set_to_string(kk));
      if (iso_image(sxz, hh) != kk)
        r.fail("image", triple_key(x, y, z),
               "phi" + pair_key(x, z) + "[H∘H] = " + set_to_string(iso_image(sxz, hh)) +
                   " != " + set_to_string(kk));
    } catch (const Error& e) {
      r.fail("image", triple_key(x, y, z), e.what());
    }
  }
  return r;
}

GroupTriple with_identity_shifts(GroupPair p) {
  GroupTriple t;
  t.pair = std::move(p);
  for (auto& [x, y, z] : composable_triples(t.pair)) {
    const Bits hh = complex_product(t.pair.group(x), t.pair.system(x, y).H,
                                    t.pair.has_edge(x, z) ? t.pair.system(x, z).H
                                                          : t.pair.group(x).trivial_subgroup());
    t.shifts[{x, y, z}] = hh;
  }
  return t;
}

Report validate_shifts(const GroupTriple& t) {
  Report r;
  int nontrivial = 0;
  const auto triples = composable_triples(t.pair);
  for (auto& [x, y, z] : triples) {
    auto it = t.shifts.find({x, y, z});
    if (it == t.shifts.end()) {
      r.fail("shift", triple_key(x, y, z), "no shift coset given");
      continue;
    }
    if (!t.pair.has_edge(x, z)) continue;
    const Bits hh = complex_product(t.pair.group(x), t.pair.system(x, y).H,
                                    t.pair.system(x, z).H);
    const Bits& c = it->second;
    if (c.none() || c.size() != hh.size()) {
      r.fail("shift", triple_key(x, y, z), "shift " + set_to_string(c) + " is empty");
      continue;
    }
    const Bits coset = left_coset(t.pair.group(x), static_cast<int>(c.find_first()), hh);
    if (coset != c) {
      r.fail("shift", triple_key(x, y, z),
             set_to_string(c) + " is not a coset of " + set_to_string(hh));
      continue;
    }
    if (c != hh) ++nontrivial;
  }
  for (auto& [key, c] : t.shifts) {
    if (!std::binary_search(triples.begin(), triples.end(), key))
      r.fail("shift", triple_key(key[0], key[1], key[2]), "shift given for non-composable triple");
  }
  r.note("nontrivial-shifts " + std::to_string(nontrivial));
  return r;
}

Report validate_triple(const GroupTriple& t) {
  Report r;
  r.merge(check_equivalence(t.pair));
  GroupTriple canon = t;
  try {
    canon.pair = canonicalize(t.pair);
  } catch (const ConventionUnsatisfiable& e) {
    r.fail("converse", "-", e.what());
    return r;
  }
  r.merge(check_identity_condition(canon.pair));
  r.merge(check_converse_condition(canon.pair));
  r.merge(check_composition_condition(canon.pair));
  if (r.ok()) r.merge(check_image_equations(canon.pair));
  r.merge(validate_shifts(canon));
  return r;
}

GroupTriple direct_product(const GroupTriple& a, const GroupTriple& b) {
  GroupTriple out = a;
  const int off = a.pair.index_count();
  for (const auto& g : b.pair.groups) out.pair.groups.push_back(g);
  for (auto& [x, y] : b.pair.edges) out.pair.edges.insert({x + off, y + off});
  for (auto& [key, sys] : b.pair.systems) {
    CosetSystem s = sys;
    s.x += off;
    s.y += off;
    out.pair.systems.emplace(std::make_pair(key.first + off, key.second + off), std::move(s));
  }
  for (auto& [key, c] : b.shifts) out.shifts[{key[0] + off, key[1] + off, key[2] + off}] = c;
  out.pair.canonical = a.pair.canonical && b.pair.canonical;
  return out;
}

bool is_simple_triple(const GroupTriple& t) {
  const int m = t.pair.index_count();
  return t.pair.edges.size() == static_cast<std::size_t>(m) * m;
}

}  // namespace cra
