// Benchmark comparing the serial batch runner against the OpenMP one on a
// grid of linear RRCBF scenarios. Scenario results are identical by
// construction; this only measures throughput.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rrcbf/batch.hpp"

namespace {

double wall_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::vector<rrcbf::ScenarioConfig> make_grid(int count, double horizon) {
  std::vector<rrcbf::ScenarioConfig> configs;
  for (int i = 0; i < count; ++i) {
    rrcbf::ScenarioConfig c;
    c.name = "bench_" + std::to_string(i);
    c.plant_kind = "linear2d";
    c.variant_kind = "rrcbf";
    c.alpha_chain = {1.0};
    c.beta_gain = 2.0;
    c.disturbance_kind = "sine";
    c.dist_amp = 1.0;
    c.dist_freq = 1.0;
    // fan of starts across the safe set
    const double h0 = 0.3 + 0.05 * static_cast<double>(i);
    c.initial_state = {h0, 0.0};
    c.dt = 1e-3;
    c.horizon = horizon;
    configs.push_back(std::move(c));
  }
  return configs;
}

}  // namespace

int main(int argc, char** argv) {
  int count = 64;
  double horizon = 20.0;
  if (argc > 1) count = std::atoi(argv[1]);
  if (argc > 2) horizon = std::atof(argv[2]);

  const auto configs = make_grid(count, horizon);
  std::printf("batch of %d linear RRCBF scenarios, horizon %.1f s, dt 1e-3\n", count, horizon);

  double t0 = wall_seconds();
  const auto serial = rrcbf::run_batch_serial(configs);
  const double t_serial = wall_seconds() - t0;

  t0 = wall_seconds();
  const auto parallel = rrcbf::run_batch(configs);
  const double t_parallel = wall_seconds() - t0;

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < serial.size(); ++i) {
    if (serial[i].records.size() != parallel[i].records.size()) ++mismatches;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("serial   : %8.3f s\n", t_serial);
  std::printf("openmp   : %8.3f s  (%d threads)\n", t_parallel, threads);
  std::printf("speedup  : %8.2fx\n", t_serial / t_parallel);
  std::printf("mismatched trajectories: %zu\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
