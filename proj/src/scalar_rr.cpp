#include "rrcbf/scalar_rr.hpp"

#include <cmath>
#include <string>

#include "rrcbf/errors.hpp"
#include "rrcbf/integrate.hpp"

namespace rrcbf {

namespace {
void check_params(const ScalarRrParams& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0))
    throw DomainError("scalar_rr: alpha and beta must be positive");
  if (p.w_bar < 0.0) throw DomainError("scalar_rr: w_bar must be nonnegative");
}
}  // namespace

double analytic_solution(const ScalarRrParams& params, double z0, double t) {
  check_params(params);
  if (!(z0 > 0.0)) throw DomainError("analytic_solution: z0 must be positive");
  if (t < 0.0) throw DomainError("analytic_solution: t must be nonnegative");
  const double eq = params.beta / params.alpha;
  return std::sqrt((z0 * z0 - eq) * std::exp(-2.0 * params.alpha * t) + eq);
}

WorstCaseRoots worst_case_roots(const ScalarRrParams& params) {
  check_params(params);
  const double disc = std::sqrt(params.w_bar * params.w_bar + 4.0 * params.alpha * params.beta);
  return {(disc - params.w_bar) / (2.0 * params.alpha), (disc + params.w_bar) / (2.0 * params.alpha),
          std::sqrt(params.beta / params.alpha)};
}

double zdot(const ScalarRrParams& params, double z, double w) {
  check_params(params);
  if (!(z > 0.0)) throw DomainError("zdot: z must be positive (singularity at 0)");
  return -params.alpha * z + params.beta / z + w;
}

std::vector<ScalarSample> simulate_scalar_rr(const ScalarRrParams& params, double z0,
                                             const std::function<double(double)>& disturbance,
                                             double dt, double horizon) {
  check_params(params);
  if (!(z0 > 0.0)) throw DomainError("simulate_scalar_rr: z0 must be positive");
  if (!(dt > 0.0) || !(horizon > 0.0))
    throw DomainError("simulate_scalar_rr: dt and horizon must be positive");

  const long steps = std::lround(horizon / dt);
  std::vector<ScalarSample> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  double z = z0;
  out.push_back({0.0, z});
  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double w = disturbance(t);  // held over the step
    auto rhs = [&](double, double s) { return zdot(params, s, w); };
    z = rk4_step(std::function<double(double, double)>(rhs), t, z, dt);
    if (!(z > 0.0))
      throw IntegrationError("simulate_scalar_rr: z <= 0 at t=" + std::to_string(t + dt) +
                             " (step too coarse or invalid parameters)");
    out.push_back({static_cast<double>(k + 1) * dt, z});
  }
  return out;
}

}  // namespace rrcbf
