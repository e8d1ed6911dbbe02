#pragma once

#include <optional>
#include <vector>

#include "rrcbf/safety_filter.hpp"

namespace rrcbf {

/// One logged step of a closed-loop run. psi holds psi_1..psi_{r-1} (empty
/// for relative degree 1); a and b are the halfspace constraint actually
/// handed to the filter. On a singular termination the final record keeps the
/// offending state with NaN filter fields.
struct StepRecord {
  double t = 0.0;
  Vector x;
  double h = 0.0;
  std::vector<double> psi;
  double u_nominal = 0.0;
  double u_applied = 0.0;
  FilterStatus status = FilterStatus::Inactive;
  double slack = 0.0;
  double w_true = 0.0;
  double d_hat = 0.0;  // channel-units estimate (0 without observer)
  RowVector a;
  double b = 0.0;
};

struct Trajectory {
  std::vector<StepRecord> records;
  bool singular_termination = false;
  long out_of_box_warnings = 0;
};

struct SafetyMetrics {
  double min_h = 0.0;
  std::optional<double> first_violation_time;  // present iff min_h < 0
  double settling_h = 0.0;                     // mean h over the final 10% of logged time
  double max_input = 0.0;
  long infeasible_steps = 0;
};

/// which_h selects the monitored level: 0 for h itself, i >= 1 for psi_i.
SafetyMetrics compute_metrics(const Trajectory& traj, int which_h = 0);

}  // namespace rrcbf
