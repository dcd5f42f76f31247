#include "cra/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace cra {

Element Embedding::image_of(const Element& e) const {
  Element out(target.n());
  for (auto i = e.find_first(); i != Bits::npos; i = e.find_next(i)) out |= map[i];
  return out;
}

namespace {

GroupTriple canonical_copy(const GroupTriple& t) {
  if (t.pair.canonical) return t;
  GroupTriple c = t;
  c.pair = canonicalize(t.pair);
  return c;
}

// Backtracking state of the embedding search.
struct EmbedSearch {
  const FiniteRelationAlgebra& src;
  const FiniteRelationAlgebra& tgt;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<int> order;          // source atoms, most constrained first
  std::vector<Element> image;     // per source atom; zero = unassigned
  std::vector<bool> assigned;
  Element used;                    // target atoms consumed

  EmbedSearch(const FiniteRelationAlgebra& s, const FiniteRelationAlgebra& t, std::uint64_t b)
      : src(s), tgt(t), budget(b), image(s.n(), Element(t.n())), assigned(s.n(), false),
        used(t.n()) {
    order.resize(src.n());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> degree(src.n(), 0);
    for (int i = 0; i < src.n(); ++i)
      for (int j = 0; j < src.n(); ++j)
        degree[i] += src.s.compose_atoms(i, j).count() + src.s.compose_atoms(j, i).count();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
  }

  bool identity_source(int i) const { return src.s.identity_atoms.test(i); }

  // All laws decidable on the currently assigned atoms.
  bool consistent() const {
    Element id_union(tgt.n());
    bool all_id_assigned = true;
    for (int i = 0; i < src.n(); ++i) {
      if (!identity_source(i)) continue;
      if (assigned[i])
        id_union |= image[i];
      else
        all_id_assigned = false;
    }
    if (!id_union.is_subset_of(tgt.s.identity_atoms)) return false;
    if (all_id_assigned && id_union != tgt.s.identity_atoms) return false;

    const Element pool = ~used;
    for (int i = 0; i < src.n(); ++i) {
      if (!assigned[i]) continue;
      if (!tgt.converse_of(image[i]).is_subset_of(assigned[src.s.converse[i]]
                                                      ? image[src.s.converse[i]]
                                                      : pool))
        return false;
      for (int j = 0; j < src.n(); ++j) {
        if (!assigned[j]) continue;
        const Element prod = tgt.compose(image[i], image[j]);
        const Element& expect = src.s.compose_atoms(i, j);
        Element covered(tgt.n());
        bool complete = true;
        for (auto w = expect.find_first(); w != Bits::npos; w = expect.find_next(w)) {
          if (assigned[w]) {
            if (!image[w].is_subset_of(prod)) return false;
            covered |= image[w];
          } else {
            complete = false;
          }
        }
        for (int w = 0; w < src.n(); ++w)
          if (assigned[w] && !expect.test(w) && (image[w] & prod).any()) return false;
        const Element leftover = prod - covered;
        if (leftover.any()) {
          if (complete) return false;
          if (!leftover.is_subset_of(pool)) return false;
        }
      }
    }
    return true;
  }

  bool place(int atom, const Element& value) {
    image[atom] = value;
    assigned[atom] = true;
    used |= value;
    const int conv = src.s.converse[atom];
    if (conv != atom && !assigned[conv]) {
      const Element cimg = tgt.converse_of(value);
      if ((cimg & used).any()) return false;
      image[conv] = cimg;
      assigned[conv] = true;
      used |= cimg;
    }
    return true;
  }

  void unplace(int atom) {
    const int conv = src.s.converse[atom];
    for (int a : {atom, conv}) {
      if (assigned[a]) {
        used -= image[a];
        image[a].reset();
        assigned[a] = false;
      }
    }
  }

  // Enumerates candidate images for `atom` in ascending size, lexicographic
  // within a size, calling fn on each admissible one. Returns false when the
  // node budget ran out.
  template <typename Fn>
  bool candidates(int atom, Fn fn) {
    Element base = ~used;
    if (identity_source(atom))
      base &= tgt.s.identity_atoms;
    else
      base -= tgt.s.identity_atoms;
    const auto idx = members(base);
    const bool self_conv = src.s.converse[atom] == atom;
    for (std::size_t k = 1; k <= idx.size(); ++k) {
      std::vector<std::size_t> comb(k);
      std::iota(comb.begin(), comb.end(), 0);
      while (true) {
        if (++nodes > budget) {
          out_of_budget = true;
          return false;
        }
        Element cand(tgt.n());
        for (auto c : comb) cand.set(idx[c]);
        const Element conv = tgt.converse_of(cand);
        const bool admissible = self_conv ? conv == cand : (conv & cand).none();
        if (admissible && !fn(cand)) return false;
        // next k-combination
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == idx.size() - k + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    return true;
  }

  bool solve(std::size_t pos, std::vector<Element>& found) {
    while (pos < order.size() && assigned[order[pos]]) ++pos;
    if (pos == order.size()) {
      found = image;
      return true;
    }
    const int atom = order[pos];
    bool done = false;
    candidates(atom, [&](const Element& cand) {
      const Element saved_used = used;
      if (place(atom, cand) && consistent()) {
        if (solve(pos + 1, found)) {
          done = true;
          return false;  // stop enumeration
        }
      }
      unplace(atom);
      used = saved_used;
      return !out_of_budget;
    });
    return done;
  }
};

}  // namespace

EmbeddingResult find_embedding(const FiniteRelationAlgebra& source,
                               const FiniteRelationAlgebra& target, std::uint64_t budget) {
  EmbeddingResult res;
  EmbedSearch search(source, target, budget);
  std::vector<Element> found;
  if (source.n() == 0) {
    res.status = EmbedStatus::NoEmbedding;
    return res;
  }
  if (search.solve(0, found)) {
    Embedding emb{source, target, std::move(found)};
    if (verify_embedding(emb).ok()) {
      res.status = EmbedStatus::Found;
      res.embedding = std::move(emb);
    } else {
      res.status = EmbedStatus::NoEmbedding;  // should not happen; be safe
    }
  } else {
    res.status = search.out_of_budget ? EmbedStatus::NotFoundWithinBudget
                                      : EmbedStatus::NoEmbedding;
  }
  res.nodes = search.nodes;
  return res;
}

Report verify_embedding(const Embedding& e) {
  Report r;
  const auto& src = e.source;
  const auto& tgt = e.target;
  if (static_cast<int>(e.map.size()) != src.n()) {
    r.fail("embedding", "-", "map has wrong length");
    return r;
  }
  Element seen(tgt.n());
  for (int i = 0; i < src.n(); ++i) {
    if (e.map[i].none()) r.fail("embedding-nonzero", src.s.label(i), "image is zero");
    if ((e.map[i] & seen).any())
      r.fail("embedding-disjoint", src.s.label(i), "image overlaps an earlier image");
    seen |= e.map[i];
  }
  if (e.image_of(src.identity()) != tgt.identity())
    r.fail("embedding-identity", "-",
           "identity maps to " + set_to_string(e.image_of(src.identity())) + ", expected " +
               set_to_string(tgt.identity()));
  for (int i = 0; i < src.n(); ++i)
    if (tgt.converse_of(e.map[i]) != e.map[src.s.converse[i]])
      r.fail("embedding-converse", src.s.label(i), "converse is not preserved");
  for (int i = 0; i < src.n(); ++i)
    for (int j = 0; j < src.n(); ++j) {
      Element expect(tgt.n());
      const Element& prod = src.s.compose_atoms(i, j);
      for (auto w = prod.find_first(); w != Bits::npos; w = prod.find_next(w)) expect |= e.map[w];
      if (tgt.compose(e.map[i], e.map[j]) != expect)
        r.fail("embedding-compose", "(" + src.s.label(i) + "," + src.s.label(j) + ")",
               "composition is not preserved");
    }
  return r;
}

Report verify_embedding_exhaustive(const Embedding& e) {
  Report r = verify_embedding(e);
  const int m = e.source.n();
  if (m > 12) {
    r.note("element-level scan skipped: source has more than 2^12 elements");
    return r;
  }
  const std::uint32_t total = 1u << m;
  std::vector<Element> src_el(total, Element(m)), img(total, Element(e.target.n()));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) src_el[mask].set(i);
    img[mask] = e.image_of(src_el[mask]);
  }
  for (std::uint32_t m1 = 0; m1 < total; ++m1) {
    if (e.target.converse_of(img[m1]) != e.image_of(e.source.converse_of(src_el[m1]))) {
      r.fail("embedding-converse", "element " + set_to_string(src_el[m1]),
             "converse is not preserved");
    }
    for (std::uint32_t m2 = 0; m2 < total; ++m2) {
      if ((img[m1] | img[m2]) != img[m1 | m2] || (img[m1] & img[m2]) != img[m1 & m2]) {
        r.fail("embedding-boolean", "elements " + set_to_string(src_el[m1]) + "," +
                                        set_to_string(src_el[m2]),
               "join or meet not preserved");
        continue;
      }
      if (e.target.compose(img[m1], img[m2]) !=
          e.image_of(e.source.compose(src_el[m1], src_el[m2])))
        r.fail("embedding-compose", "elements " + set_to_string(src_el[m1]) + "," +
                                        set_to_string(src_el[m2]),
               "composition is not preserved");
    }
  }
  return r;
}

std::vector<std::pair<AtomIndex, AtomIndex>> compare_compositions(const GroupTriple& t) {
  const GroupTriple canon = canonical_copy(t);
  std::vector<std::pair<AtomIndex, AtomIndex>> diffs;
  const auto atoms = all_atoms(canon.pair);
  for (const AtomIndex& a : atoms)
    for (const AtomIndex& b : atoms) {
      if (a.y != b.x) continue;
      if (atom_compose(canon.pair, a, b) != atom_shifted_compose(canon, a, b))
        diffs.emplace_back(a, b);
    }
  return diffs;
}

PointPartition point_partition(const Embedding& emb, const GroupTriple& t, int point_atom) {
  PointPartition out;
  out.point_atom = point_atom;
  const GroupTriple canon = canonical_copy(t);
  const int m = canon.pair.index_count();
  if (emb.target.atom_meta.empty()) {
    out.consistency.fail("partition-internal", "-", "target carries no block metadata");
    return out;
  }

  const Element img = emb.map.at(point_atom) | emb.image_of(emb.source.identity());

  // related(x, y): every atom of block (x, y) lies below the image of p + 1'.
  std::vector<std::vector<bool>> related(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (!canon.pair.has_edge(x, y)) continue;
      bool all = true, any = false;
      for (int i = 0; i < emb.target.n(); ++i) {
        const AtomIndex& meta = emb.target.atom_meta[i];
        if (meta.x != x || meta.y != y) continue;
        any = true;
        if (!img.test(i)) all = false;
      }
      related[x][y] = any && all;
    }
  }

  for (int x = 0; x < m; ++x) {
    bool in_domain = false;
    for (int y = 0; y < m; ++y) in_domain = in_domain || related[x][y];
    if (in_domain) out.domain.push_back(x);
  }
  for (int x : out.domain) {
    if (!related[x][x])
      out.consistency.fail("partition-internal", pair_key(x, x), "not reflexive on its domain");
    for (int y = 0; y < m; ++y) {
      if (related[x][y] && !related[y][x])
        out.consistency.fail("partition-internal", pair_key(x, y), "not symmetric");
      for (int z = 0; z < m; ++z)
        if (related[x][y] && related[y][z] && !related[x][z])
          out.consistency.fail("partition-internal", triple_key(x, y, z), "not transitive");
    }
  }

  // Classes = connected components over the domain.
  std::vector<bool> placed(m, false);
  for (int x : out.domain) {
    if (placed[x]) continue;
    std::vector<int> cls = {x};
    placed[x] = true;
    for (std::size_t q = 0; q < cls.size(); ++q)
      for (int y : out.domain)
        if (!placed[y] && (related[cls[q]][y] || related[y][cls[q]])) {
          placed[y] = true;
          cls.push_back(y);
        }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

TrivialityReport triviality_analysis(const GroupTriple& t) {
  TrivialityReport rep;
  const GroupTriple canon = canonical_copy(t);
  rep.all_h_trivial = true;
  for (auto& [key, sys] : canon.pair.systems) {
    if (sys.H.count() != 1) {
      rep.all_h_trivial = false;
      rep.nontrivial_h.push_back(key);
    }
  }

  const FiniteRelationAlgebra a = build_full_algebra(canon);
  rep.all_atoms_functional = true;
  for (int i = 0; i < a.n(); ++i) {
    if (!is_functional(a, a.atom(i))) {
      rep.all_atoms_functional = false;
      rep.non_functional_atoms.push_back(a.atom_meta[i]);
    }
  }

  rep.all_shifts_trivial = true;
  for (auto& [key, c] : canon.shifts) {
    const Bits hh = complex_product(canon.pair.group(key[0]), canon.pair.system(key[0], key[1]).H,
                                    canon.pair.system(key[0], key[2]).H);
    if (c != hh) rep.all_shifts_trivial = false;
  }

  if (rep.all_h_trivial && !rep.all_atoms_functional)
    rep.invariant.fail("triviality", "-",
                       "all subgroups trivial but some atom is not functional");
  return rep;
}

ShiftSearchResult search_shift_systems(const GroupPair& p, std::uint64_t budget) {
  GroupPair canon = p.canonical ? p : canonicalize(p);
  {
    Report r;
    r.merge(check_identity_condition(canon));
    r.merge(check_converse_condition(canon));
    r.merge(check_composition_condition(canon));
    if (!r.ok()) throw InvalidTriple("shift search needs a pair meeting all closure conditions: " +
                                     r.to_string());
  }

  const auto triples = composable_triples(canon);
  std::vector<std::vector<Bits>> options;
  for (auto& [x, y, z] : triples) {
    const Bits hh = complex_product(canon.group(x), canon.system(x, y).H, canon.system(x, z).H);
    options.push_back(cosets(canon.group(x), hh).cosets);
  }

  ShiftSearchResult res;
  std::vector<std::size_t> pick(triples.size(), 0);
  while (true) {
    if (res.tested >= budget) {
      res.budget_exceeded = true;
      break;
    }
    ++res.tested;
    GroupTriple t;
    t.pair = canon;
    bool trivial = true;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      t.shifts[triples[i]] = options[i][pick[i]];
      trivial = trivial && pick[i] == 0;
    }
    const FiniteRelationAlgebra a = build_full_algebra(t);
    if (check_ra_axioms(a).ok()) res.passing.push_back({t.shifts, trivial});

    // odometer
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return res;
}

Report verify_coset_consequences(const GroupTriple& t) {
  Report r;
  const GroupTriple canon = canonical_copy(t);
  for (auto& [x, y] : canon.pair.edges) {
    auto it = canon.shifts.find({x, y, x});
    if (it == canon.shifts.end()) {
      r.fail("coset-consequence", pair_key(x, y), "no shift for triple " + triple_key(x, y, x));
      continue;
    }
    const Bits& h = canon.pair.system(x, y).H;
    if (it->second != h)
      r.fail("coset-consequence", pair_key(x, y),
             "C" + triple_key(x, y, x) + " = " + set_to_string(it->second) + " differs from H" +
                 pair_key(x, y) + " = " + set_to_string(h));
  }
  return r;
}

}  // namespace cra
