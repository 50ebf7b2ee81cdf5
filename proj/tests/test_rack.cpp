#include <doctest.h>

#include "qcover/rack.hpp"
#include "qcover/rng.hpp"
#include "qcover/sampler.hpp"
#include "qcover/zoo.hpp"

using namespace qcover;

TEST_CASE("validation accepts the involutive three-element quandle") {
  RackPtr q = zoo::qabs();
  CHECK(q->order() == 3);
  CHECK(q->fwd(0, 2) == 1);  // a <| s = b
  CHECK(q->bwd(1, 2) == 0);  // b <|^-1 s = a
  RackFlags f = q->classify();
  CHECK(f.is_quandle);
  CHECK(f.is_involutive);
  CHECK(!f.is_trivial);
}

TEST_CASE("validation accepts trivial tables and reports witnesses otherwise") {
  RackPtr t3 = trivial_rack(3);
  RackFlags f = t3->classify();
  CHECK(f.is_quandle);
  CHECK(f.is_involutive);
  CHECK(f.is_trivial);

  // column 1 not injective
  CHECK_THROWS_AS(FiniteRack::validate("bad", {}, {{0, 1}, {1, 1}}), NotBijectiveColumn);
  try {
    FiniteRack::validate("bad", {}, {{0, 1}, {1, 1}});
  } catch (const NotBijectiveColumn& e) {
    CHECK(e.column == 1);
  }

  CHECK_THROWS_AS(FiniteRack::validate("ragged", {}, {{0, 1}}), ShapeError);
  CHECK_THROWS_AS(FiniteRack::validate("empty", {}, {}), ShapeError);

  // bijective columns but no self-distributivity: x <| y = x + 1 only for y = 0
  std::vector<std::vector<int>> nd = {{1, 0, 0}, {2, 1, 1}, {0, 2, 2}};
  CHECK_THROWS_AS(FiniteRack::validate("nd", {}, nd), SelfDistributivityFail);
}

TEST_CASE("six-element involutive rack classifies as a non-quandle") {
  RackPtr r = zoo::rack6();
  RackFlags f = r->classify();
  CHECK(!f.is_quandle);  // a <| a = a2
  CHECK(f.is_involutive);
  CHECK(!f.is_trivial);
  CHECK(r->fwd(0, 0) == 1);              // a <| a = a2
  CHECK(r->fwd(0, 4) == 2);              // a <| 1 = b
  CHECK(r->fwd(0, 5) == 3);              // a <| 2 = b2
}

TEST_CASE("conjugation racks") {
  // abelian conjugation is trivial
  std::vector<std::vector<int>> z3(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z3[i][j] = (i + j) % 3;
  RackPtr c = conj_of_group("conjZ3", {}, z3);
  CHECK(c->classify().is_trivial);

  RackPtr s3 = zoo::conj_s3();
  CHECK(s3->order() == 6);
  CHECK(s3->classify().is_quandle);
  CHECK(inn_group(*s3).order() == 6);  // inner automorphisms of the group

  RackPtr one = conj_of_group("conj1", {}, {{0}});
  CHECK(one->order() == 1);

  auto broken = z3;
  broken[1][1] = 1;  // 1*1 = 1 breaks associativity/inverses
  CHECK_THROWS_AS(conj_of_group("x", {}, broken), NotAGroup);
}

TEST_CASE("inner automorphism groups") {
  CHECK(inn_group(*trivial_rack(4)).order() == 1);

  PermGroup g = inn_group(*zoo::qabs());
  CHECK(g.order() == 2);
  // generated by the transposition of a and b
  REQUIRE(g.generators().size() == 1);
  CHECK(g.generators()[0] == Perm{1, 0, 2});

  CHECK(inn_group(*zoo::dihedral(3)).order() == 6);
}

TEST_CASE("closure cap is enforced") {
  CHECK_THROWS_AS(inn_group(*zoo::dihedral(5), 3), ClosureCapExceeded);
}

TEST_CASE("random racks satisfy the unfolded identities") {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    RackPtr Xp = sampler::random_rack(rng, 6);
    const FiniteRack& X = *Xp;
    for (int x = 0; x < X.order(); ++x)
      for (int y = 0; y < X.order(); ++y)
        for (int z = 0; z < X.order(); ++z) {
          CHECK(X.fwd(x, X.fwd(y, z)) == X.fwd(X.fwd(X.bwd(x, z), y), z));
          CHECK(X.fwd(x, X.bwd(y, z)) == X.bwd(X.fwd(X.fwd(x, z), y), z));
          CHECK(X.bwd(x, X.bwd(y, z)) == X.bwd(X.bwd(X.fwd(x, z), y), z));
          CHECK(X.bwd(x, X.fwd(y, z)) == X.fwd(X.bwd(X.bwd(x, z), y), z));
        }
  }
}
