#pragma once

#include <string>

#include "rrcbf/trajectory.hpp"

namespace rrcbf {

/// Fixed column order: t, x[0..n), h, psi[1..r), u_nominal, u_applied,
/// filter_status, slack, w_true, d_hat, a[0..m), b. Values are written with
/// 17 significant digits so a parsed file reproduces the records exactly.
std::string trajectory_to_csv(const Trajectory& traj);

void write_trajectory_csv(const Trajectory& traj, const std::string& path);

Trajectory read_trajectory_csv(const std::string& path);
Trajectory trajectory_from_csv(const std::string& text, const std::string& origin = "<text>");

}  // namespace rrcbf
