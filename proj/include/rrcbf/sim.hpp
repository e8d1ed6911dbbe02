#pragma once

#include "rrcbf/config.hpp"
#include "rrcbf/integrate.hpp"
#include "rrcbf/trajectory.hpp"

namespace rrcbf {

/// Fixed-step closed-loop run. Per step: sample w(t), read the observer
/// estimate, evaluate the nominal controller, build the variant constraint
/// (high-order dispatch when the safe function has relative degree >= 2),
/// filter, then integrate plant and observer jointly with RK4 under
/// zero-order-hold control and disturbance.
///
/// A reciprocal variant hitting its singularity ends the run with the
/// offending state logged and singular_termination set instead of throwing;
/// unsafe runs are first-class outputs. Deterministic given the config
/// (randomness only through the seeded disturbance).
Trajectory run_scenario(const ScenarioConfig& config);

}  // namespace rrcbf
