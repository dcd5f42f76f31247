#include <doctest.h>

#include <array>

#include "cra/relations.hpp"
#include "fixtures.hpp"

using namespace cra;

namespace {

ConcreteRelation rel_of(std::initializer_list<std::array<int, 4>> pairs) {
  ConcreteRelation r;
  for (auto& q : pairs) r.pairs.insert({{q[0], q[1]}, {q[2], q[3]}});
  return r;
}

ConcreteRelation lift(const GroupPair& p, const std::vector<AtomIndex>& atoms) {
  ConcreteRelation out;
  for (const AtomIndex& a : atoms)
    for (auto& pr : atom_relation(p, a).pairs) out.pairs.insert(pr);
  return out;
}

}  // namespace

TEST_CASE("atom_relation expands the coset definition") {
  const GroupPair f1 = fixtures::f1().pair;
  CHECK(atom_relation(f1, {0, 0, 1}) == rel_of({{0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(atom_relation(f1, {0, 0, 0}) == rel_of({{0, 0, 0, 0}, {0, 1, 0, 1}}));

  const GroupPair t1 = fixtures::t1().pair;
  const ConcreteRelation r = atom_relation(t1, {0, 1, 0});
  CHECK(r.size() == 8);
  // {0,2} x {0,2} union {1,3} x {1,3}
  for (int u : {0, 2})
    for (int v : {0, 2}) CHECK(r.contains({0, u}, {1, v}));
  for (int u : {1, 3})
    for (int v : {1, 3}) CHECK(r.contains({0, u}, {1, v}));
  CHECK_THROWS_AS(atom_relation(t1, {0, 1, 5}), IndexOutOfRange);
}

TEST_CASE("the zero diagonal atoms are the identity relation") {
  for (const auto& [name, t] : fixtures::corpus()) {
    CAPTURE(name);
    ConcreteRelation diag_union;
    for (int x = 0; x < t.pair.index_count(); ++x) {
      ConcreteRelation expect;
      for (int g = 0; g < t.pair.group(x).order; ++g) expect.pairs.insert({{x, g}, {x, g}});
      CHECK(atom_relation(t.pair, {x, x, 0}) == expect);
      for (auto& pr : expect.pairs) diag_union.pairs.insert(pr);
    }
    CHECK(diag_union == identity_relation(t.pair));
    CHECK(rel_converse(diag_union) == diag_union);
  }
}

TEST_CASE("rel_converse and rel_compose are the brute-force operations") {
  CHECK(rel_converse(rel_of({{0, 0, 0, 1}})) == rel_of({{0, 1, 0, 0}}));
  const ConcreteRelation id = rel_of({{0, 0, 0, 0}, {0, 1, 0, 1}});
  CHECK(rel_converse(id) == id);
  CHECK(rel_compose(rel_of({{0, 0, 0, 1}}), rel_of({{0, 1, 0, 0}})) == rel_of({{0, 0, 0, 0}}));
  CHECK(rel_compose(rel_of({{0, 0, 0, 1}}), ConcreteRelation{}).pairs.empty());

  const GroupPair t1 = fixtures::t1().pair;
  CHECK(rel_compose(block_relation(t1, 0, 1), block_relation(t1, 1, 2)) ==
        block_relation(t1, 0, 2));
}

TEST_CASE("atom_converse") {
  const GroupPair f2 = fixtures::f2().pair;
  CHECK(atom_converse(f2, {0, 0, 1}) == AtomIndex{0, 0, 3});

  const GroupPair t1 = fixtures::t1().pair;
  CHECK(atom_converse(t1, {0, 1, 1}) == AtomIndex{1, 0, 1});  // {1,3} is its own inverse set
  for (const auto& [name, t] : fixtures::corpus()) {
    CAPTURE(name);
    for (auto& [x, y] : t.pair.edges)
      CHECK(atom_converse(t.pair, {x, y, 0}) == AtomIndex{y, x, 0});
  }
}

TEST_CASE("atom_compose") {
  const GroupPair f1 = fixtures::f1().pair;
  CHECK(atom_compose(f1, {0, 0, 1}, {0, 0, 1}) == std::vector<AtomIndex>{{0, 0, 0}});

  const GroupPair t1 = fixtures::t1().pair;
  CHECK(atom_compose(t1, {0, 1, 0}, {1, 2, 0}) == std::vector<AtomIndex>{{0, 2, 0}, {0, 2, 2}});
  CHECK(atom_compose(t1, {0, 1, 0}, {2, 0, 0}).empty());  // mismatched middle
}

TEST_CASE("atom_shifted_compose") {
  SUBCASE("identity shifts agree with plain composition everywhere") {
    for (const auto& [name, t] : fixtures::corpus()) {
      CAPTURE(name);
      const auto atoms = all_atoms(t.pair);
      for (const AtomIndex& a : atoms)
        for (const AtomIndex& b : atoms)
          CHECK(atom_shifted_compose(t, a, b) == atom_compose(t.pair, a, b));
    }
  }
  SUBCASE("the Z2 shift moves the product to the other coset") {
    const GroupTriple t = fixtures::f1_shifted();
    CHECK(atom_shifted_compose(t, {0, 0, 0}, {0, 0, 0}) == std::vector<AtomIndex>{{0, 0, 1}});
    CHECK(atom_shifted_compose(t, {0, 0, 1}, {0, 0, 0}) == std::vector<AtomIndex>{{0, 0, 0}});
  }
  SUBCASE("mismatched middle is empty") {
    const GroupTriple t1 = fixtures::t1();
    CHECK(atom_shifted_compose(t1, {0, 1, 0}, {2, 0, 0}).empty());
  }
}

TEST_CASE("block partitions across the corpus") {
  for (const auto& [name, t] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(check_block_partitions(t.pair).ok());
  }
}

TEST_CASE("atom counts per block") {
  const GroupPair t1 = fixtures::t1().pair;
  CHECK(all_atoms(t1).size() == 28);
  CHECK(t1.system(0, 1).kappa() == 2);
  CHECK(t1.system(0, 2).kappa() == 4);
  CHECK(t1.system(1, 2).kappa() == 2);
  CHECK(t1.system(0, 0).kappa() == 4);
}

TEST_CASE("converse coherence: atom maps agree with the relational oracle") {
  for (const auto& [name, t] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(check_converse_coherence(t.pair).ok());
  }
}

TEST_CASE("composition coherence: atom maps agree with the relational oracle") {
  for (const auto& [name, t] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(check_composition_coherence(t.pair).ok());
  }
}

TEST_CASE("sampled coherence mode agrees on a small fixture") {
  CoherenceOptions opt;
  opt.force_sampled = true;
  opt.samples = 500;
  opt.seed = 7;
  CHECK(check_converse_coherence(fixtures::f2().pair, opt).ok());
  CHECK(check_composition_coherence(fixtures::t1().pair, opt).ok());
}

TEST_CASE("semantic converse and composition coherence, spelled out") {
  const GroupPair t1 = fixtures::t1().pair;
  CHECK(atom_relation(t1, atom_converse(t1, {0, 1, 0})) ==
        rel_converse(atom_relation(t1, {0, 1, 0})));
  CHECK(lift(t1, atom_compose(t1, {0, 1, 0}, {1, 2, 0})) ==
        rel_compose(atom_relation(t1, {0, 1, 0}), atom_relation(t1, {1, 2, 0})));
}

TEST_CASE("composition identities on validated triples") {
  for (const auto& [name, t] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK(check_composition_identities(t).ok());
  }
}

TEST_CASE("atom_relation_contains matches materialization") {
  const GroupPair t1 = fixtures::t1().pair;
  for (const AtomIndex& a : all_atoms(t1)) {
    const ConcreteRelation r = atom_relation(t1, a);
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v)
        CHECK(atom_relation_contains(t1, a, u, v) == r.contains({a.x, u}, {a.y, v}));
  }
}
