#include "rrcbf/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rrcbf {

std::vector<Trajectory> run_batch_serial(const std::vector<ScenarioConfig>& configs) {
  std::vector<Trajectory> out(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) out[i] = run_scenario(configs[i]);
  return out;
}

std::vector<Trajectory> run_batch(const std::vector<ScenarioConfig>& configs, int num_threads) {
#ifdef _OPENMP
  if (num_threads == 1) return run_batch_serial(configs);
  std::vector<Trajectory> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const auto count = static_cast<long>(configs.size());
#pragma omp parallel for schedule(dynamic) num_threads(num_threads > 0 ? num_threads : omp_get_max_threads())
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_scenario(configs[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
#else
  (void)num_threads;
  return run_batch_serial(configs);
#endif
}

}  // namespace rrcbf
