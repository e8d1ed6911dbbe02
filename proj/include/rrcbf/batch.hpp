#pragma once

#include <vector>

#include "rrcbf/sim.hpp"

namespace rrcbf {

/// Serial reference: runs the scenarios one after another.
std::vector<Trajectory> run_batch_serial(const std::vector<ScenarioConfig>& configs);

/// OpenMP-parallel batch runner. Scenarios are independent (value-typed
/// configs, no shared state), so the result is identical to the serial
/// reference record-for-record; the tests assert that. Falls back to the
/// serial loop when built without OpenMP or with num_threads == 1.
std::vector<Trajectory> run_batch(const std::vector<ScenarioConfig>& configs,
                                  int num_threads = 0 /* 0 = runtime default */);

}  // namespace rrcbf
