#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "qcover/covers.hpp"
#include "qcover/path_group.hpp"
#include "qcover/rng.hpp"
#include "qcover/sampler.hpp"
#include "qcover/zoo.hpp"

using namespace qcover;

TEST_CASE("path presentations") {
  // one generator, every relation cancels: the free group on one generator
  PathPresentation p1 = pth_presentation(trivial_rack(1));
  REQUIRE(p1.relations.size() == 1);
  CHECK(p1.relations[0].empty());

  RackPtr q = zoo::qabs();
  PathPresentation pq = pth_presentation(q);
  CHECK(pq.relations.size() == 9);
  // a <| s = b contributes b^-1 s^-1 a s
  GroupWord expected({{1, -1}, {2, -1}, {0, 1}, {2, 1}});
  bool found = false;
  for (const GroupWord& r : pq.relations) found = found || r == expected;
  CHECK(found);
  for (const GroupWord& r : pq.relations) CHECK(r.char_sum() == 0);

  // trivial racks present free abelian groups: all relations are commutators
  PathPresentation pt = pth_presentation(trivial_rack(4));
  for (const GroupWord& r : pt.relations) {
    auto v = r.exponent_vector(4);
    CHECK(std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }));
  }
}

TEST_CASE("excess and action") {
  RackPtr q = zoo::qabs();
  CHECK(perm_is_identity(excess(*q, GroupWord())));
  CHECK(excess(*q, GroupWord::single(2, 1)) == Perm{1, 0, 2});  // s swaps a, b
  // relations die in the inner group
  CHECK(perm_is_identity(excess(*q, GroupWord({{1, -1}, {2, -1}, {0, 1}, {2, 1}}))));

  CHECK(act(*q, 0, GroupWord::single(2, 1)) == 1);                       // a . s = b
  CHECK(act(*q, 0, GroupWord()) == 0);
  CHECK(act(*q, 0, GroupWord({{2, 1}, {2, 1}})) == 0);                   // involutive
}

TEST_CASE("excess kills every defining relation") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    RackPtr X = sampler::random_rack(rng, 6);
    for (const GroupWord& r : pth_presentation(X).relations)
      CHECK(perm_is_identity(excess(*X, r)));
  }
}

namespace {

long long det_expand(const std::vector<std::vector<long long>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  long long s = 0, sign = 1;
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> sub;
    for (int i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(row);
    }
    s += sign * m[0][c] * det_expand(sub);
    sign = -sign;
  }
  return s;
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sel(k);
  std::function<void(int, int)> go = [&](int start, int depth) {
    if (depth == k) {
      visit(sel);
      return;
    }
    for (int i = start; i < n; ++i) {
      sel[depth] = i;
      go(i + 1, depth + 1);
    }
  };
  go(0, 0);
}

// Determinant-divisor oracle: d1...dk equals the gcd of all k x k minors.
// Independent of the reduction path the implementation takes.
long long minor_gcd(const IntMat& M, int k, int rows, int cols) {
  long long g = 0;
  subsets(rows, k, [&](const std::vector<int>& rs) {
    subsets(cols, k, [&](const std::vector<int>& cs) {
      std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = M[rs[i]][cs[j]];
      long long d = det_expand(a);
      g = std::gcd(g, d < 0 ? -d : d);
    });
  });
  return g;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  SmithResult id2 = smith_normal_form({{1, 0}, {0, 1}});
  CHECK(id2.diagonal == std::vector<long long>{1, 1});
  CHECK(id2.rank_free == 0);
  CHECK(id2.torsion.empty());

  SmithResult t = smith_normal_form({{2, 0}, {0, 0}});
  CHECK(t.diagonal == std::vector<long long>{2, 0});
  CHECK(t.rank_free == 1);
  CHECK(t.torsion == std::vector<long long>{2});

  SmithResult r = smith_normal_form({{1, -1, 0}, {-1, 1, 0}});
  CHECK(r.diagonal == std::vector<long long>{1, 0, 0});
  CHECK(r.rank_free == 2);
  CHECK(r.torsion.empty());
}

TEST_CASE("smith normal form against the determinant-divisor oracle") {
  Rng rng(17);
  for (int iter = 0; iter < 120; ++iter) {
    int rows = 1 + rng.below(4), cols = 1 + rng.below(4);
    IntMat M(rows, std::vector<long long>(cols));
    for (auto& row : M)
      for (auto& v : row) v = rng.below(7) - 3;
    SmithResult s = smith_normal_form(M);
    // divisibility chain
    long long prev = 0;
    for (long long d : s.diagonal) {
      CHECK(d >= 0);
      if (prev > 0 && d > 0) CHECK(d % prev == 0);
      prev = d;
    }
    long long prod = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
      if (s.diagonal[k - 1] == 0) {
        CHECK(minor_gcd(M, k, rows, cols) == 0);
        break;
      }
      prod *= s.diagonal[k - 1];
      CHECK(prod == minor_gcd(M, k, rows, cols));
    }
  }
}

TEST_CASE("smith reduction guards against overflow") {
  long long big = std::numeric_limits<long long>::max() / 2;
  CHECK_THROWS_AS(smith_normal_form({{3, big}, {5, 7}}), OverflowGuard);
}

TEST_CASE("lattice membership through the right transform") {
  IntMat M = {{1, -1, 0}, {0, 1, -1}};
  SmithLattice L = smith_lattice(M);
  CHECK(in_row_lattice(L, {1, -1, 0}));
  CHECK(in_row_lattice(L, {1, 0, -1}));
  CHECK(!in_row_lattice(L, {1, 0, 0}));
  CHECK(in_row_lattice(L, {0, 0, 0}));

  IntMat two = {{2, 0}};
  SmithLattice l2 = smith_lattice(two);
  CHECK(in_row_lattice(l2, {4, 0}));
  CHECK(!in_row_lattice(l2, {1, 0}));
  CHECK(!in_row_lattice(l2, {0, 2}));
}

TEST_CASE("abelianizations match component counts") {
  SmithResult q = abelianization(pth_presentation(zoo::qabs()));
  CHECK(q.rank_free == 2);
  CHECK(q.torsion.empty());

  for (int n : {1, 2, 5}) {
    SmithResult t = abelianization(pth_presentation(trivial_rack(n)));
    CHECK(t.rank_free == n);
    CHECK(t.torsion.empty());
  }

  SmithResult s3 = abelianization(pth_presentation(zoo::conj_s3()));
  CHECK(s3.rank_free == 3);
  CHECK(s3.torsion.empty());
}

TEST_CASE("characteristic-zero generators") {
  CHECK(pth0_generators(*trivial_rack(1)).empty());

  auto gens = pth0_generators(*zoo::qabs());
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == GroupWord({{0, 1}, {1, -1}}));
  CHECK(gens[1] == GroupWord({{0, 1}, {2, -1}}));

  auto t2 = pth0_generators(*trivial_rack(2));
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == GroupWord({{0, 1}, {1, -1}}));
  for (const GroupWord& g : gens) CHECK(g.char_sum() == 0);
}

TEST_CASE("kernel image subgroups") {
  RackPtr q = zoo::qabs();
  CHECK(kernel_image_subgroup(identity_hom(q)).is_trivial());

  RackHom eta = check_hom(q, trivial_rack(2), {0, 0, 1});
  CHECK(kernel_image_subgroup(eta).is_trivial());

  RackPtr r3 = zoo::dihedral(3);
  RackHom collapse = check_hom(r3, trivial_rack(1), {0, 0, 0});
  PermGroup k = kernel_image_subgroup(collapse);
  CHECK(!k.is_trivial());
  CHECK(k.order() == 3);  // the translations

  RackHom not_surj = check_hom(trivial_rack(1), trivial_rack(2), {0});
  CHECK_THROWS_AS(kernel_image_subgroup(not_surj), NotSurjective);
}

TEST_CASE("three-valued word equality") {
  RackPtr qp = zoo::qabs();
  const FiniteRack& q = *qp;
  GroupWord a = GroupWord::single(0, 1);
  GroupWord b = GroupWord::single(1, 1);
  GroupWord s = GroupWord::single(2, 1);

  CHECK(word_eq3(q, a, a).verdict == Eq3::Equal);

  WordEqReport r1 = word_eq3(q, a, s);
  CHECK(r1.verdict == Eq3::NotEqual);
  CHECK(!r1.detail.empty());

  // the two trivially-acting generators are identified in the path group
  WordEqReport r2 = word_eq3(q, a, b);
  CHECK(r2.verdict == Eq3::Equal);
  CHECK(r2.method == "rewriting");

  // inner images differ: s acts, a does not
  WordEqReport r3 = word_eq3(q, s, GroupWord());
  CHECK(r3.verdict == Eq3::NotEqual);

  // equal inner images but separated by the abelianized invariant
  GroupWord aaa = a * a * a;
  CHECK(excess(q, a) == excess(q, aaa));
  WordEqReport r4 = word_eq3(q, a, aaa);
  CHECK(r4.verdict == Eq3::NotEqual);
  CHECK(r4.method == "abelianized");
}

TEST_CASE("word equality soundness on random inputs") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    RackPtr X = sampler::random_rack(rng, 5);
    GroupWord u = sampler::random_word(rng, X->order(), 4);
    GroupWord v = sampler::random_word(rng, X->order(), 4);
    WordEqReport rep = word_eq3(*X, u, v);
    if (rep.verdict == Eq3::Equal) CHECK(excess(*X, u) == excess(*X, v));
    PathPresentation P = pth_presentation(X);
    const GroupWord& r = P.relations[rng.below(static_cast<int>(P.relations.size()))];
    GroupWord c = sampler::random_word(rng, X->order(), 2);
    CHECK(word_eq3(*X, u, u * (c * r * c.inverse())).verdict != Eq3::NotEqual);
  }
}
