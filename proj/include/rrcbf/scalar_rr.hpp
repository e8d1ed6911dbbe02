#pragma once

#include <functional>
#include <vector>

namespace rrcbf {

/// Parameters of the reciprocal-resistance scalar dynamics
/// zdot = -alpha z + beta / z + w,  |w| <= w_bar.
struct ScalarRrParams {
  double alpha = 1.0;
  double beta = 1.0;
  double w_bar = 0.0;
};

/// Thresholds of the worst-case quadratics -alpha z^2 -/+ w_bar z + beta.
/// The flow points inward on (0, z1] and outward on [z2, inf) for every
/// admissible disturbance; z_eq = sqrt(beta/alpha) is the undisturbed
/// equilibrium and 0 < z1 <= z_eq <= z2.
struct WorstCaseRoots {
  double z1 = 0.0;
  double z2 = 0.0;
  double z_eq = 0.0;
};

/// Closed-form undisturbed solution sqrt((z0^2 - beta/alpha) e^{-2 alpha t} + beta/alpha).
double analytic_solution(const ScalarRrParams& params, double z0, double t);

WorstCaseRoots worst_case_roots(const ScalarRrParams& params);

/// Right-hand side -alpha z + beta/z + w. Throws DomainError on z <= 0.
double zdot(const ScalarRrParams& params, double z, double w);

/// One logged sample of the simulated scalar dynamics.
struct ScalarSample {
  double t;
  double z;
};

/// Fixed-step RK4 simulation of the disturbed scalar dynamics with the
/// disturbance held over each step. No clamping is applied: a step that
/// produces z <= 0 (which a valid parameterization cannot, at adequate dt)
/// throws IntegrationError so violations of the theory are loud.
std::vector<ScalarSample> simulate_scalar_rr(const ScalarRrParams& params, double z0,
                                             const std::function<double(double)>& disturbance,
                                             double dt, double horizon);

}  // namespace rrcbf
