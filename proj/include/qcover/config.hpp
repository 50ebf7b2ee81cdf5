#pragma once

#include <cstddef>
#include <cstdint>

namespace qcover {

// Knobs shared by the CLI and the property batteries. A fixed seed makes
// every report byte-identical.
struct RunConfig {
  std::uint64_t seed = 0xC0FFEE;
  std::size_t closure_cap = 1'000'000;
  int horn_samples = 1000;
  int rewrite_depth = 4;
  enum class Output { Text, Json, Dot } output = Output::Text;
};

}  // namespace qcover
