#include <chrono>
#include <cstdlib>
#include <iostream>

#include "qcover/suite.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qcover;

// Times the heavy batteries with the serial runner and the sharded one and
// prints the per-property speedup. Sample streams are identical in both runs,
// so the outcomes must match exactly; any drift aborts the benchmark.

namespace {

double run_ms(const SuiteConfig& cfg, std::vector<PropertyOutcome>& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = run_suite(cfg);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  cfg.samples = argc > 1 ? std::atoi(argv[1]) : 200;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
  std::cout << "samples: " << cfg.samples << "\n";

  std::vector<PropertyOutcome> serial_out, parallel_out;
  cfg.parallel = false;
  double serial = run_ms(cfg, serial_out);
  cfg.parallel = true;
  double parallel = run_ms(cfg, parallel_out);

  for (std::size_t i = 0; i < serial_out.size(); ++i) {
    if (serial_out[i].failures != parallel_out[i].failures ||
        serial_out[i].first_witness != parallel_out[i].first_witness) {
      std::cerr << "outcome drift on " << serial_out[i].name << "\n";
      return 1;
    }
  }

  std::cout << "serial:   " << serial << " ms\n";
  std::cout << "parallel: " << parallel << " ms\n";
  std::cout << "speedup:  " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";

  bool ok = true;
  for (const auto& o : serial_out) ok = ok && o.failures == 0;
  return ok ? 0 : 1;
}
