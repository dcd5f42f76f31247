#include "cra/relations.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cra {

std::string atom_label(const AtomIndex& a) {
  return "R[" + std::to_string(a.x) + "," + std::to_string(a.y) + "," + std::to_string(a.alpha) +
         "]";
}

namespace {

void check_atom_index(const GroupPair& p, const AtomIndex& a) {
  if (!p.has_edge(a.x, a.y)) throw IndexOutOfRange("no edge " + pair_key(a.x, a.y));
  if (a.alpha < 0 || a.alpha >= p.system(a.x, a.y).kappa())
    throw IndexOutOfRange("coset position " + std::to_string(a.alpha) + " on block " +
                          pair_key(a.x, a.y));
}

}  // namespace

ConcreteRelation atom_relation(const GroupPair& p, const AtomIndex& a) {
  check_atom_index(p, a);
  const CosetSystem& sys = p.system(a.x, a.y);
  const FiniteGroup& gy = p.group(a.y);
  ConcreteRelation r;
  for (int g = 0; g < sys.kappa(); ++g) {
    const Bits range = complex_product(gy, sys.k_cosets[g], sys.k_cosets[a.alpha]);
    for (auto u = sys.h_cosets[g].find_first(); u != Bits::npos; u = sys.h_cosets[g].find_next(u))
      for (auto v = range.find_first(); v != Bits::npos; v = range.find_next(v))
        r.pairs.insert({{a.x, static_cast<int>(u)}, {a.y, static_cast<int>(v)}});
  }
  return r;
}

bool atom_relation_contains(const GroupPair& p, const AtomIndex& a, int u, int v) {
  check_atom_index(p, a);
  const CosetSystem& sys = p.system(a.x, a.y);
  const int g = sys.h_index_of[u];
  const Bits range = complex_product(p.group(a.y), sys.k_cosets[g], sys.k_cosets[a.alpha]);
  return range.test(v);
}

ConcreteRelation rel_converse(const ConcreteRelation& r) {
  ConcreteRelation out;
  for (auto& [a, b] : r.pairs) out.pairs.insert({b, a});
  return out;
}

ConcreteRelation rel_compose(const ConcreteRelation& r, const ConcreteRelation& s) {
  std::map<Point, std::vector<Point>> by_first;
  for (auto& [a, b] : s.pairs) by_first[a].push_back(b);
  ConcreteRelation out;
  for (auto& [a, b] : r.pairs) {
    auto it = by_first.find(b);
    if (it == by_first.end()) continue;
    for (const Point& c : it->second) out.pairs.insert({a, c});
  }
  return out;
}

ConcreteRelation identity_relation(const GroupPair& p) {
  ConcreteRelation r;
  for (int x = 0; x < p.index_count(); ++x)
    for (int g = 0; g < p.group(x).order; ++g) r.pairs.insert({{x, g}, {x, g}});
  return r;
}

ConcreteRelation block_relation(const GroupPair& p, int x, int y) {
  ConcreteRelation r;
  for (int u = 0; u < p.group(x).order; ++u)
    for (int v = 0; v < p.group(y).order; ++v) r.pairs.insert({{x, u}, {y, v}});
  return r;
}

AtomIndex atom_converse(const GroupPair& p, const AtomIndex& a) {
  check_atom_index(p, a);
  const CosetSystem& sys = p.system(a.x, a.y);
  const Bits inverse_coset = set_inverse(p.group(a.x), sys.h_cosets[a.alpha]);
  const int beta = sys.h_index_of[inverse_coset.find_first()];
  return {a.y, a.x, beta};
}

namespace {

// Common core of plain and shifted composition: the atoms (x, z, g) whose
// H_xz-coset lies inside the given subset of G_x.
std::vector<AtomIndex> collect_result_atoms(const GroupPair& p, int x, int z, const Bits& inside) {
  const CosetSystem& sxz = p.system(x, z);
  std::vector<AtomIndex> out;
  for (int g = 0; g < sxz.kappa(); ++g)
    if (sxz.h_cosets[g].is_subset_of(inside)) out.push_back({x, z, g});
  return out;
}

}  // namespace

std::vector<AtomIndex> atom_compose(const GroupPair& p, const AtomIndex& a, const AtomIndex& b) {
  check_atom_index(p, a);
  check_atom_index(p, b);
  if (a.y != b.x) return {};
  const CosetSystem& sxy = p.system(a.x, a.y);
  const CosetSystem& syz = p.system(b.x, b.y);
  const Bits prod = complex_product(p.group(a.y), sxy.k_cosets[a.alpha], syz.h_cosets[b.alpha]);
  const Bits pre = iso_preimage(sxy, prod);
  return collect_result_atoms(p, a.x, b.y, pre);
}

std::vector<AtomIndex> atom_shifted_compose(const GroupTriple& t, const AtomIndex& a,
                                            const AtomIndex& b) {
  const GroupPair& p = t.pair;
  check_atom_index(p, a);
  check_atom_index(p, b);
  if (a.y != b.x) return {};
  const CosetSystem& sxy = p.system(a.x, a.y);
  const CosetSystem& syz = p.system(b.x, b.y);
  const Bits prod = complex_product(p.group(a.y), sxy.k_cosets[a.alpha], syz.h_cosets[b.alpha]);
  const Bits pre = iso_preimage(sxy, prod);
  const Bits& shift = t.shifts.at({a.x, a.y, b.y});
  const Bits shifted = complex_product(p.group(a.x), pre, shift);
  return collect_result_atoms(p, a.x, b.y, shifted);
}

std::vector<AtomIndex> all_atoms(const GroupPair& p) {
  std::vector<AtomIndex> out;
  for (auto& [x, y] : p.edges)
    for (int g = 0; g < p.system(x, y).kappa(); ++g) out.push_back({x, y, g});
  std::sort(out.begin(), out.end());
  return out;
}

Report check_block_partitions(const GroupPair& p) {
  Report r;
  for (auto& [x, y] : p.edges) {
    const CosetSystem& sys = p.system(x, y);
    ConcreteRelation seen;
    std::size_t total = 0;
    for (int g = 0; g < sys.kappa(); ++g) {
      const ConcreteRelation rel = atom_relation(p, {x, y, g});
      if (rel.pairs.empty()) {
        r.fail("partition", pair_key(x, y), atom_label({x, y, g}) + " is empty");
        continue;
      }
      total += rel.size();
      for (auto& pr : rel.pairs) seen.pairs.insert(pr);
    }
    const std::size_t block =
        static_cast<std::size_t>(p.group(x).order) * static_cast<std::size_t>(p.group(y).order);
    if (seen.size() != total)
      r.fail("partition", pair_key(x, y), "atoms overlap");
    if (seen.size() != block)
      r.fail("partition", pair_key(x, y),
             "union covers " + std::to_string(seen.size()) + " of " + std::to_string(block) +
                 " pairs");
  }
  return r;
}

namespace {

bool use_sampling(const GroupPair& p, int x, int y, const CoherenceOptions& opt) {
  if (opt.force_sampled) return true;
  const std::size_t block =
      static_cast<std::size_t>(p.group(x).order) * static_cast<std::size_t>(p.group(y).order);
  return block > opt.exhaustive_limit;
}

std::string point_pair_string(const std::pair<Point, Point>& pr) {
  return "((" + std::to_string(pr.first.group) + "," + std::to_string(pr.first.element) +
         "),(" + std::to_string(pr.second.group) + "," + std::to_string(pr.second.element) +
         "))";
}

// A pair on which the two relations differ; the relations are assumed
// unequal.
std::string first_difference(const ConcreteRelation& a, const ConcreteRelation& b) {
  for (auto& pr : a.pairs)
    if (!b.contains(pr.first, pr.second)) return point_pair_string(pr) + " only on the left";
  for (auto& pr : b.pairs)
    if (!a.contains(pr.first, pr.second)) return point_pair_string(pr) + " only on the right";
  return "no difference";
}

}  // namespace

Report check_converse_coherence(const GroupPair& p, const CoherenceOptions& opt) {
  Report r;
  for (const AtomIndex& a : all_atoms(p)) {
    const AtomIndex c = atom_converse(p, a);
    if (!use_sampling(p, a.x, a.y, opt)) {
      const ConcreteRelation lhs = atom_relation(p, c);
      const ConcreteRelation rhs = rel_converse(atom_relation(p, a));
      if (lhs != rhs)
        r.fail("converse-coherence", atom_label(a),
               "atom converse " + atom_label(c) + " disagrees with the relational inverse at " +
                   first_difference(lhs, rhs));
    } else {
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<int> du(0, p.group(a.x).order - 1);
      std::uniform_int_distribution<int> dv(0, p.group(a.y).order - 1);
      for (std::size_t i = 0; i < opt.samples; ++i) {
        const int u = du(rng), v = dv(rng);
        if (atom_relation_contains(p, a, u, v) != atom_relation_contains(p, c, v, u)) {
          r.fail("converse-coherence", atom_label(a),
                 "disagreement at sampled pair (" + std::to_string(u) + "," + std::to_string(v) +
                     ")");
          break;
        }
      }
    }
  }
  return r;
}

Report check_composition_coherence(const GroupPair& p, const CoherenceOptions& opt) {
  Report r;
  const auto atoms = all_atoms(p);
  for (const AtomIndex& a : atoms) {
    for (const AtomIndex& b : atoms) {
      if (a.y != b.x) continue;
      const auto result = atom_compose(p, a, b);
      if (!use_sampling(p, a.x, b.y, opt)) {
        ConcreteRelation lifted;
        for (const AtomIndex& c : result)
          for (auto& pr : atom_relation(p, c).pairs) lifted.pairs.insert(pr);
        const ConcreteRelation oracle = rel_compose(atom_relation(p, a), atom_relation(p, b));
        if (lifted != oracle)
          r.fail("composition-coherence", atom_label(a) + ";" + atom_label(b),
                 "atom composition disagrees with relational composition at " +
                     first_difference(lifted, oracle));
      } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> du(0, p.group(a.x).order - 1);
        std::uniform_int_distribution<int> dw(0, p.group(b.y).order - 1);
        for (std::size_t i = 0; i < opt.samples; ++i) {
          const int u = du(rng), w = dw(rng);
          bool in_atoms = false;
          for (const AtomIndex& c : result)
            if (atom_relation_contains(p, c, u, w)) {
              in_atoms = true;
              break;
            }
          bool in_oracle = false;
          for (int v = 0; v < p.group(a.y).order && !in_oracle; ++v)
            in_oracle = atom_relation_contains(p, a, u, v) && atom_relation_contains(p, b, v, w);
          if (in_atoms != in_oracle) {
            r.fail("composition-coherence", atom_label(a) + ";" + atom_label(b),
                   "disagreement at sampled pair (" + std::to_string(u) + "," +
                       std::to_string(w) + ")");
            break;
          }
        }
      }
    }
  }
  return r;
}

Report check_composition_identities(const GroupTriple& t) {
  Report r;
  const GroupPair& p = t.pair;

  // a ⊗ a^-1 = a ∘ a^-1 = the subidentity translations over H_xy.
  for (const AtomIndex& a : all_atoms(p)) {
    const AtomIndex c = atom_converse(p, a);
    const CosetSystem& sys = p.system(a.x, a.y);
    const CosetSystem& diag = p.system(a.x, a.x);
    std::vector<AtomIndex> expected;
    for (auto g = sys.H.find_first(); g != Bits::npos; g = sys.H.find_next(g))
      expected.push_back({a.x, a.x, diag.h_index_of[g]});
    std::sort(expected.begin(), expected.end());
    const auto plain = atom_compose(p, a, c);
    const auto shifted = atom_shifted_compose(t, a, c);
    if (plain != expected)
      r.fail("self-converse-product", atom_label(a),
             "a∘a⁻ has " + std::to_string(plain.size()) + " atoms, expected " +
                 std::to_string(expected.size()));
    if (shifted != expected)
      r.fail("self-converse-product", atom_label(a),
             "a⊗a⁻ has " + std::to_string(shifted.size()) + " atoms, expected " +
                 std::to_string(expected.size()));
  }

  // Full rows compose to full blocks under both operations.
  for (auto& [x, y, z] : composable_triples(p)) {
    std::set<AtomIndex> plain, shifted, expected;
    for (int g = 0; g < p.system(x, z).kappa(); ++g) expected.insert({x, z, g});
    for (int ga = 0; ga < p.system(x, y).kappa(); ++ga) {
      for (int gb = 0; gb < p.system(y, z).kappa(); ++gb) {
        for (auto& c : atom_compose(p, {x, y, ga}, {y, z, gb})) plain.insert(c);
        for (auto& c : atom_shifted_compose(t, {x, y, ga}, {y, z, gb})) shifted.insert(c);
      }
    }
    if (plain != expected)
      r.fail("block-product", triple_key(x, y, z), "row ∘ row does not cover the block");
    if (shifted != expected)
      r.fail("block-product", triple_key(x, y, z), "row ⊗ row does not cover the block");
  }
  return r;
}

}  // namespace cra
