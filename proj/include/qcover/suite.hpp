#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcover/rng.hpp"

namespace qcover {

struct SuiteConfig {
  std::uint64_t seed = 0xC0FFEE;
  int samples = 200;  // base sample count; properties scale it
  std::size_t closure_cap = 1'000'000;
  int horns_per_covering = 5;
  int max_order = 6;
  bool mutate = false;   // inject one table fault per sampled rack
  bool parallel = true;  // shard samples across threads
};

// One law, checked one independent sample at a time. The check draws its own
// sample from the stream, returns nullopt on pass and a (shrunk) witness
// description on failure. Checks must be pure in (rng, cfg) so sharding the
// sample loop cannot change the outcome.
struct Property {
  std::string name;
  int scale_num = 1;  // samples = cfg.samples * scale_num / scale_den, >= 1
  int scale_den = 1;
  std::function<std::optional<std::string>(Rng&, const SuiteConfig&)> check;
};

const std::vector<Property>& suite_properties();
const Property& find_property(const std::string& name);

struct PropertyOutcome {
  std::string name;
  int samples = 0;
  int failures = 0;
  std::string first_witness;  // witness of the lowest failing sample index
};

PropertyOutcome run_property(const Property& p, const SuiteConfig& cfg, int samples);

// Runs every registered property. cfg.parallel switches between the
// OpenMP-sharded loop and the serial reference; both produce identical
// outcomes because every sample owns an independent seeded stream.
std::vector<PropertyOutcome> run_suite(const SuiteConfig& cfg);

}  // namespace qcover
