#include <doctest.h>

#include "qcover/free_rack.hpp"
#include "qcover/rng.hpp"
#include "qcover/sampler.hpp"
#include "qcover/word.hpp"

using namespace qcover;

namespace {
GroupWord W(std::initializer_list<Letter> ls) { return GroupWord(std::vector<Letter>(ls)); }
}  // namespace

TEST_CASE("free reduction and multiplication") {
  CHECK(W({{0, 1}}) * W({{0, -1}}) == GroupWord());
  CHECK(W({{0, 1}, {1, 1}}) * W({{1, -1}, {2, 1}}) == W({{0, 1}, {2, 1}}));
  CHECK(W({{0, 1}, {1, -1}}) * W({{1, 1}, {0, -1}}) == GroupWord());
  // stored form is always a reduction fixpoint
  GroupWord w({{0, 1}, {0, -1}, {1, 1}, {1, 1}, {1, -1}});
  CHECK(w == W({{1, 1}}));
}

TEST_CASE("characteristic is the exponent sum") {
  CHECK(GroupWord().char_sum() == 0);
  CHECK(W({{0, 1}, {1, 1}, {0, -1}}).char_sum() == 1);
  CHECK(W({{0, 1}, {1, -1}}).char_sum() == 0);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    GroupWord u = sampler::random_word(rng, 4, 6);
    GroupWord v = sampler::random_word(rng, 4, 6);
    CHECK((u * v).char_sum() == u.char_sum() + v.char_sum());
  }
}

TEST_CASE("letterwise image") {
  std::vector<int> collapse = {0, 0};
  CHECK(W({{0, 1}, {1, -1}}).mapped(collapse) == GroupWord());
  std::vector<int> id = {0, 1, 2};
  GroupWord u = W({{0, 1}, {2, -1}, {1, 1}});
  CHECK(u.mapped(id) == u);
  std::vector<int> two = {0, 1};
  CHECK(W({{0, 1}, {1, 1}}).mapped(two) == W({{0, 1}, {1, 1}}));
}

TEST_CASE("word parsing round-trip") {
  std::vector<std::string> labels = {"a", "b", "s"};
  GroupWord u = GroupWord::parse("a b^-1 a", labels);
  CHECK(u == W({{0, 1}, {1, -1}, {0, 1}}));
  CHECK(u.str(labels) == "a b^-1 a");
  CHECK(GroupWord::parse("a a^-1", labels) == GroupWord());
  CHECK(GroupWord().str(labels) == "e");
  CHECK_THROWS_AS(GroupWord::parse("q", labels), ShapeError);
}

TEST_CASE("free rack operation") {
  FreeRackElem ae{0, {}};  // (a, e)
  FreeRackElem be{1, {}};
  CHECK(fr_op(ae, be, 1) == FreeRackElem{0, W({{1, 1}})});
  CHECK(fr_op(FreeRackElem{0, W({{1, 1}})}, be, -1) == ae);
  // acting by (b, c) contributes the conjugated letter
  FreeRackElem bc{1, W({{2, 1}})};
  CHECK(fr_op(ae, bc, 1) == FreeRackElem{0, W({{2, -1}, {1, 1}, {2, 1}})});
}

TEST_CASE("free quandle normalization and operation") {
  CHECK(fq_normalize(0, W({{0, 1}})) == FreeQuandleElem{0, {}});
  CHECK(fq_normalize(0, W({{1, 1}})) == FreeQuandleElem{0, W({{0, -1}, {1, 1}})});
  CHECK(fq_normalize(0, {}) == FreeQuandleElem{0, {}});

  FreeQuandleElem ae{0, {}};
  FreeQuandleElem be{1, {}};
  CHECK(fq_op(ae, ae, 1) == ae);
  CHECK(fq_op(ae, be, 1) == FreeQuandleElem{0, W({{0, -1}, {1, 1}})});
  CHECK(fq_op(FreeQuandleElem{0, W({{0, -1}, {1, 1}})}, be, -1) == ae);
  CHECK_THROWS_AS(fq_op(FreeQuandleElem{0, W({{1, 1}})}, ae, 1), CharacteristicNonZero);
}

TEST_CASE("kernel pairing on the collapse map") {
  std::vector<int> f = {0, 0};  // a, b both map to x
  GroupWord u = W({{0, 1}, {1, -1}});
  auto w = kernel_pairing(f, u);
  REQUIRE(w.has_value());
  CHECK(w->pairing == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(w->nu == std::vector<Letter>{{0, 1}, {1, -1}});
  CHECK(w->nu_prime == std::vector<Letter>{{0, 1}, {0, -1}});
  CHECK(GroupWord(w->nu_prime).empty());

  CHECK(kernel_pairing(f, GroupWord())->pairing.empty());

  std::vector<int> sep = {0, 1};  // distinct images: x+ y- survives
  CHECK(!kernel_pairing(sep, u).has_value());
}

TEST_CASE("kernel pairing recovers deeper nestings") {
  std::vector<int> f = {0, 0, 1};
  // (a b^-1) conjugated by c, then another pair
  GroupWord u = W({{2, 1}, {0, 1}, {1, -1}, {2, -1}, {1, 1}, {0, -1}});
  auto w = kernel_pairing(f, u);
  REQUIRE(w.has_value());
  CHECK(GroupWord(w->nu_prime).empty());
  CHECK(GroupWord(w->nu) * GroupWord(w->nu_prime).inverse() == u);
  for (auto [i, j] : w->pairing)
    for (auto [l, m] : w->pairing) {
      bool crossing = i < l && l < j && j < m;
      CHECK(!crossing);
    }
}
