#include <doctest.h>

#include "qcover/congruence.hpp"
#include "qcover/hom.hpp"
#include "qcover/rng.hpp"
#include "qcover/sampler.hpp"
#include "qcover/zoo.hpp"

using namespace qcover;

TEST_CASE("congruence generation") {
  RackPtr q = zoo::qabs();
  CHECK(Congruence::from_pairs(q, {}).class_count() == 3);

  Congruence c = Congruence::from_pairs(q, {{0, 1}});
  CHECK(c.class_count() == 2);
  CHECK(c.same(0, 1));
  CHECK(!c.same(0, 2));

  RackPtr t3 = trivial_rack(3);
  CHECK(Congruence::from_pairs(t3, {{0, 1}, {1, 2}}).class_count() == 1);
}

TEST_CASE("quotients") {
  RackPtr q = zoo::qabs();
  auto disc = quotient(q, Congruence(q));
  CHECK(disc.rack->order() == 3);
  CHECK(disc.projection.surjective);

  auto merged = quotient(q, Congruence::from_pairs(q, {{0, 1}}));
  CHECK(merged.rack->order() == 2);
  CHECK(merged.rack->classify().is_trivial);

  // letters/numbers split of the six-element rack: trivial two-element quotient
  RackPtr r6 = zoo::rack6();
  auto split = quotient(r6, Congruence::from_partition(r6, {{0, 1, 2, 3}, {4, 5}}));
  CHECK(split.rack->order() == 2);
  CHECK(split.rack->classify().is_trivial);

  // a raw partition that is not compatible gets rejected with a witness
  CHECK_THROWS_AS(quotient(r6, Congruence::from_partition(r6, {{0, 4}, {1, 2, 3, 5}})),
                  IncompatiblePartition);
}

TEST_CASE("homomorphism checking") {
  RackPtr q = zoo::qabs();
  RackHom id = identity_hom(q);
  CHECK(id.surjective);

  RackPtr t2 = trivial_rack(2);
  RackHom eta = check_hom(q, t2, {0, 0, 1});
  CHECK(eta.surjective);

  // 0 -> a, 1 -> s is not a homomorphism: a <| s = b
  CHECK_THROWS_AS(check_hom(t2, q, {0, 2}), NotAHomomorphism);
  try {
    check_hom(t2, q, {0, 2});
  } catch (const NotAHomomorphism& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 1);
  }
}

TEST_CASE("pullbacks") {
  RackPtr q = zoo::qabs();
  RackPtr t2 = trivial_rack(2);
  RackHom eta = check_hom(q, t2, {0, 0, 1});

  auto kp = pullback(eta, eta);
  CHECK(kp.rack->order() == 5);  // (a,a) (a,b) (b,a) (b,b) (s,s)
  CHECK(kp.proj1.surjective);
  CHECK(kp.proj2.surjective);

  auto along_id = pullback(eta, identity_hom(t2));
  CHECK(along_id.rack->order() == q->order());

  RackPtr t1 = trivial_rack(1);
  RackPtr t3 = trivial_rack(3);
  auto prod = pullback(check_hom(t2, t1, {0, 0}), check_hom(t3, t1, {0, 0, 0}));
  CHECK(prod.rack->order() == 6);
  CHECK(prod.rack->classify().is_trivial);
}

TEST_CASE("orbit congruences") {
  RackPtr q = zoo::qabs();
  CHECK(orbit_congruence(q, PermGroup(3, {})).is_discrete());

  Congruence co = orbit_congruence(q, inn_generators(*q));
  CHECK(co.class_count() == 2);
  CHECK(co.same(0, 1));

  RackPtr r3 = zoo::dihedral(3);
  CHECK(orbit_congruence(r3, inn_generators(*r3)).class_count() == 1);

  CHECK_THROWS_AS(orbit_congruence(q, PermGroup(5, {})), DegreeMismatch);
}

TEST_CASE("relation permutation") {
  RackPtr q = zoo::qabs();
  Congruence co = orbit_congruence(q, inn_generators(*q));
  Rng rng(3);
  for (int i = 0; i < 30; ++i)
    CHECK(relations_permute(co, sampler::random_reflexive_relation(rng, *q)));

  // two partitions of the trivial three-element rack that do not permute
  RackPtr t3 = trivial_rack(3);
  Congruence r = Congruence::from_partition(t3, {{0, 1}, {2}});
  std::vector<std::pair<int, int>> s = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}};
  CHECK(!relations_permute(r, s));

  std::vector<std::pair<int, int>> diag = {{0, 0}};
  CHECK(relations_permute(r, diag));
}

TEST_CASE("orbit congruences of normal subgroups permute with everything") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    RackPtr X = sampler::random_rack(rng, 6);
    PermGroup inn = inn_generators(*X);
    GroupWord w = sampler::random_word(rng, X->order(), 4);
    Perm g = perm_identity(X->order());
    for (const Letter& l : w.letters())
      g = perm_compose(g, l.second > 0 ? X->symmetry(l.first) : X->symmetry_inv(l.first));
    PermGroup n = inn.normal_closure({g});
    Congruence r = orbit_congruence(X, n);
    CHECK(relations_permute(r, sampler::random_reflexive_relation(rng, *X)));
  }
}
