#include "rrcbf/trajectory.hpp"

#include <cmath>

#include "rrcbf/errors.hpp"

namespace rrcbf {

SafetyMetrics compute_metrics(const Trajectory& traj, int which_h) {
  if (traj.records.empty()) throw DomainError("compute_metrics: empty trajectory");
  auto level = [which_h](const StepRecord& r) {
    if (which_h == 0) return r.h;
    return r.psi.at(static_cast<std::size_t>(which_h - 1));
  };

  SafetyMetrics m;
  m.min_h = level(traj.records.front());
  for (const auto& r : traj.records) {
    const double v = level(r);
    if (v < m.min_h) m.min_h = v;
    if (v < 0.0 && !m.first_violation_time.has_value()) m.first_violation_time = r.t;
    if (std::isfinite(r.u_applied)) m.max_input = std::max(m.max_input, std::abs(r.u_applied));
    if (r.status == FilterStatus::Infeasible) ++m.infeasible_steps;
  }

  const double t_end = traj.records.back().t;
  const double t_tail = traj.records.front().t + 0.9 * (t_end - traj.records.front().t);
  double sum = 0.0;
  long n = 0;
  for (const auto& r : traj.records) {
    if (r.t >= t_tail) {
      sum += level(r);
      ++n;
    }
  }
  m.settling_h = n > 0 ? sum / static_cast<double>(n) : level(traj.records.back());
  return m;
}

}  // namespace rrcbf
