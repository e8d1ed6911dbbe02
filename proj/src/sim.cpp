#include "rrcbf/sim.hpp"

#include <cmath>
#include <limits>

#include "rrcbf/errors.hpp"
#include "rrcbf/observer.hpp"

namespace rrcbf {

Trajectory run_scenario(const ScenarioConfig& config) {
  config.validate();
  const PlantModel plant = config.build_plant();
  if (plant.input_dim != 1)
    throw ConfigError("run_scenario: only single-input plants are configured");
  const DisturbanceSignal w_signal = config.build_disturbance();
  const bool filtered = config.filter_enabled();
  CbfVariantConfig variant;
  if (filtered) variant = config.build_variant();
  const int r = plant.safe_fn.relative_degree;
  const bool high_order = filtered && r >= 2;

  Vector x = Eigen::Map<const Vector>(config.initial_state.data(),
                                      static_cast<Eigen::Index>(config.initial_state.size()));
  ObserverState obs;
  if (config.observer_enabled)
    obs = make_observer(plant, x, config.observer_gain, config.observer_init);

  const long steps = std::lround(config.horizon / config.dt);
  const double dt = config.dt;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  Trajectory traj;
  traj.records.reserve(static_cast<std::size_t>(steps) + 1);

  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double w = w_signal(t);
    const double w_hat = config.observer_enabled ? observer_w_hat(obs, plant, x) : 0.0;

    StepRecord rec;
    rec.t = t;
    rec.x = x;
    rec.h = plant.safe_fn.h(x);
    rec.w_true = w;
    rec.d_hat = w_hat;
    rec.u_nominal = nominal_control(plant, x, w_hat, t);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i] < plant.admissible_lo[i] || x[i] > plant.admissible_hi[i]) {
        ++traj.out_of_box_warnings;
        break;
      }
    }

    double u = rec.u_nominal;
    if (filtered) {
      try {
        std::optional<Vector> d_hat_matched;
        if (variant_uses_estimate(variant.variant))
          d_hat_matched = Vector::Constant(1, observer_d_hat_matched(obs, plant, x));
        HalfspaceConstraint c;
        if (high_order) {
          const PsiChain chain = build_psi_chain(variant, plant, x);
          rec.psi.assign(chain.values.begin() + 1, chain.values.end());
          c = apply_chain_variant(variant, chain, d_hat_matched, t);
        } else {
          c = build_constraint(variant, plant, x, d_hat_matched, t);
        }
        rec.a = c.a;
        rec.b = c.b;
        FilterResult fr;
        if (config.input_min.has_value())
          fr = filter_scalar(rec.u_nominal, c, *config.input_min, *config.input_max);
        else
          fr = filter_projection(Vector::Constant(1, rec.u_nominal), c);
        u = fr.u_applied[0];
        rec.u_applied = u;
        rec.status = fr.status;
        rec.slack = fr.slack;
      } catch (const SingularityError&) {
        // Unsafe excursion reached the reciprocal singularity: keep the
        // offending state visible and end the run as a flagged trajectory.
        if (r >= 2) rec.psi.assign(static_cast<std::size_t>(r - 1), nan);
        rec.a = RowVector::Constant(1, nan);
        rec.b = nan;
        rec.u_applied = nan;
        rec.slack = nan;
        rec.status = FilterStatus::Infeasible;
        traj.records.push_back(std::move(rec));
        traj.singular_termination = true;
        return traj;
      }
    } else {
      if (r >= 2) rec.psi.assign(static_cast<std::size_t>(r - 1), nan);
      rec.a = RowVector::Zero(1);
      rec.b = 0.0;
      rec.u_applied = u;
      rec.status = FilterStatus::Inactive;
      rec.slack = 0.0;
    }
    traj.records.push_back(rec);
    if (k == steps) break;

    // Joint plant+observer integration, control and disturbance held.
    if (config.observer_enabled) {
      const Eigen::Index n = x.size();
      Vector aug(n + 1);
      aug.head(n) = x;
      aug[n] = obs.z;
      auto rhs = [&](double, const Vector& s) {
        const Vector xs = s.head(n);
        Vector d(n + 1);
        d.head(n) = eval_dynamics(plant, xs, u, w, t);
        d[n] = observer_zdot(obs, plant, xs, u, s[n]);
        return d;
      };
      const Vector next = rk4_step(std::function<Vector(double, const Vector&)>(rhs), t, aug, dt);
      x = next.head(n);
      obs.z = next[n];
    } else {
      auto rhs = [&](double, const Vector& s) { return eval_dynamics(plant, s, u, w, t); };
      x = rk4_step(std::function<Vector(double, const Vector&)>(rhs), t, x, dt);
    }
  }
  return traj;
}

}  // namespace rrcbf
