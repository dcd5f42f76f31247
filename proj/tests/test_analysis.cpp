#include <doctest.h>

#include "cra/analysis.hpp"
#include "cra/lyndon.hpp"
#include "fixtures.hpp"

using namespace cra;

TEST_CASE("find_embedding: an algebra embeds identically into itself") {
  const FiniteRelationAlgebra c2 = complex_algebra(cyclic(2));
  const EmbeddingResult res = find_embedding(c2, c2, 100000);
  REQUIRE(res.status == EmbedStatus::Found);
  REQUIRE(res.embedding.has_value());
  CHECK(res.embedding->map[0] == bits_of(2, {0}));
  CHECK(res.embedding->map[1] == bits_of(2, {1}));
  CHECK(verify_embedding_exhaustive(*res.embedding).ok());

  const FiniteRelationAlgebra c4 = complex_algebra(cyclic(4));
  const EmbeddingResult res4 = find_embedding(c4, c4, 100000);
  REQUIRE(res4.status == EmbedStatus::Found);
  CHECK(verify_embedding_exhaustive(*res4.embedding).ok());
}

TEST_CASE("find_embedding: the one-atom algebra lands on any identity") {
  FiniteRelationAlgebra src;
  src.s.atom_count = 1;
  src.s.identity_atoms = singleton(1, 0);
  src.s.converse = {0};
  src.s.compose = {singleton(1, 0)};
  src.s.labels = {"1'"};
  for (const FiniteRelationAlgebra& tgt :
       {complex_algebra(cyclic(4)), build_full_algebra(fixtures::t1())}) {
    const EmbeddingResult res = find_embedding(src, tgt, 100000);
    REQUIRE(res.status == EmbedStatus::Found);
    CHECK(res.embedding->map[0] == tgt.identity());
    CHECK(verify_embedding_exhaustive(*res.embedding).ok());
  }
}

TEST_CASE("find_embedding: the complex algebra of Z2 sits inside that of Z4") {
  const EmbeddingResult res =
      find_embedding(complex_algebra(cyclic(2)), complex_algebra(cyclic(4)), 100000);
  REQUIRE(res.status == EmbedStatus::Found);
  CHECK(res.embedding->map[0] == bits_of(4, {0}));
  CHECK(res.embedding->map[1] == bits_of(4, {2}));  // the subgroup {0,2}
  CHECK(verify_embedding_exhaustive(*res.embedding).ok());
}

TEST_CASE("find_embedding: lyndon(2) fits in no small complex algebra") {
  const FiniteRelationAlgebra b = lyndon_algebra(2);
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    const EmbeddingResult res = find_embedding(b, complex_algebra(cyclic(n)), 1000000);
    CHECK(res.status == EmbedStatus::NoEmbedding);  // space exhausted, nothing found
  }
}

TEST_CASE("find_embedding: lyndon(1) embeds into the complex algebra of Z3") {
  const EmbeddingResult res = find_embedding(lyndon_algebra(1), complex_algebra(cyclic(3)),
                                             100000);
  REQUIRE(res.status == EmbedStatus::Found);
  CHECK(res.embedding->map[0] == bits_of(3, {0}));
  CHECK(res.embedding->map[1] == bits_of(3, {1, 2}));
  CHECK(verify_embedding_exhaustive(*res.embedding).ok());
}

TEST_CASE("find_embedding: lyndon(1) does not embed into the complex algebra of Z2") {
  const EmbeddingResult res = find_embedding(lyndon_algebra(1), complex_algebra(cyclic(2)),
                                             100000);
  CHECK(res.status == EmbedStatus::NoEmbedding);
}

TEST_CASE("find_embedding: no Lyndon line with two points enters a nontrivial-subgroup target") {
  // Target built on a simple two-group triple with H = {0,2}: were an
  // embedding to exist, the subgroups would have to be trivial.
  const GroupTriple t = fixtures::two_group(cyclic(4), cyclic(4), {2}, {{1, 1}});
  const FiniteRelationAlgebra target = build_full_algebra(t);
  REQUIRE(target.n() == 12);
  const EmbeddingResult res = find_embedding(lyndon_algebra(2), target, 5000000);
  CHECK(res.status == EmbedStatus::NoEmbedding);
}

TEST_CASE("find_embedding: budget exhaustion is reported") {
  const GroupTriple t = fixtures::two_group(cyclic(4), cyclic(4), {2}, {{1, 1}});
  const EmbeddingResult res = find_embedding(lyndon_algebra(2), build_full_algebra(t), 10);
  CHECK(res.status == EmbedStatus::NotFoundWithinBudget);
  CHECK(res.nodes > 10);
}

TEST_CASE("embedding search into a direct-product target fails on the cross identity") {
  const FiniteRelationAlgebra target =
      build_full_algebra(direct_product(fixtures::f1(), fixtures::f1()));
  const EmbeddingResult res = find_embedding(lyndon_algebra(2), target, 1000000);
  CHECK(res.status == EmbedStatus::NoEmbedding);
}

TEST_CASE("two-point lines never land in small built targets") {
  // The strong form of the subgroup-triviality result, exercised negatively:
  // on every small corpus target the exhaustive search comes back empty, and
  // were one ever found on a target with nontrivial subgroups, the block
  // checks below would flag it.
  for (const auto& [name, t] : fixtures::corpus()) {
    const FiniteRelationAlgebra target = build_full_algebra(t);
    if (target.n() > 16) continue;
    CAPTURE(name);
    const EmbeddingResult res = find_embedding(lyndon_algebra(2), target, 300000);
    if (res.status == EmbedStatus::NotFoundWithinBudget) continue;
    if (res.status == EmbedStatus::Found) {
      // Any found embedding must verify, and each nontrivial-subgroup block
      // must sit below the image of a single point together with its
      // converse block and squares.
      CHECK(verify_embedding_exhaustive(*res.embedding).ok());
      const TrivialityReport tr = triviality_analysis(t);
      CHECK(tr.all_h_trivial);
      continue;
    }
    CHECK(res.status == EmbedStatus::NoEmbedding);
  }
}

TEST_CASE("verify_embedding rejects corrupted maps") {
  const FiniteRelationAlgebra c2 = complex_algebra(cyclic(2));
  Embedding emb{c2, complex_algebra(cyclic(4)), {bits_of(4, {0}), bits_of(4, {1})}};
  // Z2's involution cannot land on Z4's non-involution {1}.
  CHECK_FALSE(verify_embedding(emb).ok());
}

TEST_CASE("compare_compositions") {
  SUBCASE("identity shifts never differ") {
    CHECK(compare_compositions(fixtures::t1()).empty());
    for (const auto& [name, t] : fixtures::corpus()) {
      CAPTURE(name);
      CHECK(compare_compositions(t).empty());
    }
  }
  SUBCASE("the shifted Z2 triple differs on all four atom pairs") {
    const auto diffs = compare_compositions(fixtures::f1_shifted());
    REQUIRE(diffs.size() == 4);
    for (auto& [a, b] : diffs) {
      CHECK(a.x == 0);
      CHECK(b.x == 0);
    }
  }
  SUBCASE("a shift on (0,1,2) shows up exactly on the (0,1)x(1,2) pairs") {
    GroupTriple t = fixtures::t1();
    t.shifts[{0, 1, 2}] = bits_of(4, {1, 3});
    const auto diffs = compare_compositions(t);
    REQUIRE(diffs.size() == 4);
    for (auto& [a, b] : diffs) {
      CHECK(a.x == 0);
      CHECK(a.y == 1);
      CHECK(b.x == 1);
      CHECK(b.y == 2);
    }
  }
}

TEST_CASE("point_partition on the lyndon(1) embedding into Z3") {
  const GroupTriple t = fixtures::single(cyclic(3));
  const FiniteRelationAlgebra target = build_full_algebra(t);
  const EmbeddingResult res = find_embedding(lyndon_algebra(1), target, 100000);
  REQUIRE(res.status == EmbedStatus::Found);
  const PointPartition pp = point_partition(*res.embedding, t, 1);
  CHECK(pp.consistency.ok());
  REQUIRE(pp.classes.size() == 1);
  CHECK(pp.classes[0] == std::vector<int>{0});
  CHECK(pp.domain == std::vector<int>{0});
}

TEST_CASE("triviality analysis") {
  SUBCASE("all trivial subgroups make every atom functional") {
    const GroupTriple t = fixtures::two_group(cyclic(2), cyclic(2), {}, {{1, 1}});
    const TrivialityReport r = triviality_analysis(t);
    CHECK(r.all_h_trivial);
    CHECK(r.all_atoms_functional);
    CHECK(r.all_shifts_trivial);
    CHECK(r.invariant.ok());
  }
  SUBCASE("t1 has nontrivial subgroups and non-functional atoms") {
    const TrivialityReport r = triviality_analysis(fixtures::t1());
    CHECK_FALSE(r.all_h_trivial);
    CHECK_FALSE(r.all_atoms_functional);
    CHECK(r.invariant.ok());
    CHECK(std::find(r.nontrivial_h.begin(), r.nontrivial_h.end(), std::make_pair(0, 1)) !=
          r.nontrivial_h.end());
    for (const AtomIndex& a : r.non_functional_atoms) CHECK(a.x != a.y);
  }
  SUBCASE("a single trivial group is trivially functional") {
    const TrivialityReport r = triviality_analysis(fixtures::single(cyclic(1)));
    CHECK(r.all_h_trivial);
    CHECK(r.all_atoms_functional);
  }
  SUBCASE("the invariant holds across the corpus") {
    for (const auto& [name, t] : fixtures::corpus()) {
      CAPTURE(name);
      CHECK(triviality_analysis(t).invariant.ok());
    }
  }
}

TEST_CASE("search_shift_systems") {
  SUBCASE("f1: only the identity coset passes") {
    const ShiftSearchResult res = search_shift_systems(fixtures::f1().pair, 1000);
    CHECK(res.tested == 2);
    CHECK_FALSE(res.budget_exceeded);
    REQUIRE(res.passing.size() == 1);
    CHECK(res.passing[0].trivial);
    CHECK(res.passing[0].shifts.at({0, 0, 0}) == bits_of(2, {0}));
  }
  SUBCASE("f2: only the identity coset passes among the four") {
    const ShiftSearchResult res = search_shift_systems(fixtures::f2().pair, 1000);
    CHECK(res.tested == 4);
    REQUIRE(res.passing.size() == 1);
    CHECK(res.passing[0].trivial);
  }
  SUBCASE("a two-group Z2 system enumerates its full 2^8 space") {
    const GroupTriple t = fixtures::two_group(cyclic(2), cyclic(2), {}, {{1, 1}});
    const ShiftSearchResult res = search_shift_systems(t.pair, 1000);
    CHECK(res.tested == 256);
    CHECK_FALSE(res.budget_exceeded);
    // Every composable triple here has the shape (x,x,z) or (x,y,y), so the
    // identity law forces each shift to the trivial coset: exactly one
    // assignment can pass.
    REQUIRE(res.passing.size() == 1);
    CHECK(res.passing[0].trivial);
    GroupTriple cand;
    cand.pair = t.pair;
    cand.shifts = res.passing[0].shifts;
    CHECK(check_ra_axioms(build_full_algebra(cand)).ok());
    CHECK(verify_coset_consequences(cand).ok());
  }
  SUBCASE("budget exhaustion returns partial results") {
    const GroupTriple t = fixtures::two_group(cyclic(2), cyclic(2), {}, {{1, 1}});
    const ShiftSearchResult res = search_shift_systems(t.pair, 10);
    CHECK(res.tested == 10);
    CHECK(res.budget_exceeded);
  }
  SUBCASE("pairs violating the closure conditions are rejected") {
    CHECK_THROWS_AS(search_shift_systems(fixtures::b1().pair, 10), InvalidTriple);
  }
}

namespace {

const std::vector<std::array<int, 3>> kT1FreeTriples = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

GroupTriple t1_with_free_shifts(unsigned mask) {
  GroupTriple t = fixtures::t1();
  for (int i = 0; i < 6; ++i) {
    auto [x, y, z] = kT1FreeTriples[i];
    const Bits hh =
        complex_product(t.pair.group(x), t.pair.system(x, y).H, t.pair.system(x, z).H);
    if (mask >> i & 1u)
      t.shifts[kT1FreeTriples[i]] = complex_product(t.pair.group(x), singleton(4, 1), hh);
  }
  return t;
}

}  // namespace

TEST_CASE("t1's distinct-index triples admit exactly one nontrivial shift system") {
  // The diagonal-touching triples are pinned by the identity law, so the
  // interesting freedom sits on the six all-distinct triples, each with two
  // cosets of {0,2} to choose from. Enumerating all 64 combinations through
  // the axiom checker leaves exactly the unshifted system and the one where
  // all six carry the coset {1,3}.
  std::vector<unsigned> passing;
  for (unsigned mask = 0; mask < 64; ++mask)
    if (check_ra_axioms(build_full_algebra(t1_with_free_shifts(mask))).ok())
      passing.push_back(mask);
  CHECK(passing == std::vector<unsigned>{0, 63});
}

TEST_CASE("the all-shifted t1 system is a genuine coset relation algebra") {
  const GroupTriple t = t1_with_free_shifts(63);
  CHECK(validate_triple(t).ok());
  const FiniteRelationAlgebra a = build_full_algebra(t);
  CHECK(check_ra_axioms(a).ok());
  CHECK(is_simple_ra(a));
  CHECK(verify_coset_consequences(t).ok());

  const MeasurabilityReport m = measurability(a);
  CHECK(m.measurable);
  for (const AtomMeasure& am : m.per_atom) CHECK(am.measure == 4);

  // Shifted composition genuinely differs: each shifted triple (x,y,z)
  // moves every one of its kappa_xy * kappa_yz atom pairs, and no other
  // pair moves: 4+8+8+8+8+4 = 40.
  const auto diffs = compare_compositions(t);
  CHECK(diffs.size() == 40);
  for (auto& [p, q] : diffs) CHECK((p.x != p.y && p.y != q.y && p.x != q.y));

  const TrivialityReport tr = triviality_analysis(t);
  CHECK_FALSE(tr.all_shifts_trivial);
  CHECK(tr.invariant.ok());
}

TEST_CASE("verify_coset_consequences") {
  SUBCASE("identity shifts satisfy C(x,y,x) = H(x,y)") {
    CHECK(verify_coset_consequences(fixtures::t1()).ok());
    CHECK(verify_coset_consequences(fixtures::f1()).ok());
  }
  SUBCASE("the shifted Z2 triple violates it") {
    CHECK_FALSE(verify_coset_consequences(fixtures::f1_shifted()).ok());
  }
  SUBCASE("all corpus triples satisfy it") {
    for (const auto& [name, t] : fixtures::corpus()) {
      CAPTURE(name);
      CHECK(verify_coset_consequences(t).ok());
    }
  }
}
