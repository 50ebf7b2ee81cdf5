#include <doctest.h>

#include "qcover/suite.hpp"

using namespace qcover;

TEST_CASE("sharded and serial runners agree outcome for outcome") {
  SuiteConfig fast;
  fast.samples = 12;
  fast.parallel = true;
  auto parallel = run_suite(fast);
  fast.parallel = false;
  auto serial = run_suite(fast);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < parallel.size(); ++i) {
    CHECK(parallel[i].name == serial[i].name);
    CHECK(parallel[i].samples == serial[i].samples);
    CHECK(parallel[i].failures == serial[i].failures);
    CHECK(parallel[i].first_witness == serial[i].first_witness);
  }
}

TEST_CASE("small runs pass across seeds") {
  for (std::uint64_t seed : {0xC0FFEEull, 1ull, 2ull, 99ull, 31337ull}) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.samples = 6;
    for (const auto& o : run_suite(cfg)) {
      INFO(o.name, " seed ", seed, ": ", o.first_witness);
      CHECK(o.failures == 0);
    }
  }
}

TEST_CASE("at least twelve properties are registered") {
  CHECK(suite_properties().size() >= 12);
}

TEST_CASE("fault injection is caught with a witness") {
  SuiteConfig cfg;
  cfg.samples = 40;
  cfg.mutate = true;
  auto outcomes = run_suite(cfg);
  int failing_properties = 0;
  for (const auto& o : outcomes)
    if (o.failures > 0) {
      ++failing_properties;
      CHECK(!o.first_witness.empty());
    }
  CHECK(failing_properties >= 1);
}

TEST_CASE("property lookup") {
  CHECK(find_property("unfolding-identities").name == "unfolding-identities");
  CHECK_THROWS(find_property("no-such-property"));
}
