#include "rrcbf/safe_function.hpp"

#include <cmath>

#include "rrcbf/errors.hpp"

namespace rrcbf {

double gradient_check(const SafeFunctionSpec& spec, const Vector& x, double step) {
  const Vector g = spec.grad_h(x);
  double worst = 0.0;
  Vector xp = x, xm = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = step * std::max(1.0, std::abs(x[i]));
    xp[i] = x[i] + d;
    xm[i] = x[i] - d;
    const double fd = (spec.h(xp) - spec.h(xm)) / (2.0 * d);
    const double scale = std::max({1.0, std::abs(fd), std::abs(g[i])});
    worst = std::max(worst, std::abs(fd - g[i]) / scale);
    xp[i] = x[i];
    xm[i] = x[i];
  }
  return worst;
}

double rrbf_residual(const SafeFunctionSpec& spec,
                     const std::function<Vector(const Vector&)>& plant_drift, const Vector& x,
                     const ClassKFn& alpha, const ClassKFn& beta, double sigma) {
  const double h = spec.h(x);
  if (h + sigma <= 1e-12) throw SingularityError("rrbf_residual: h + sigma in singular band");
  const double lfh = spec.grad_h(x).dot(plant_drift(x));
  return lfh + alpha(h) - beta(1.0 / (h + sigma));
}

}  // namespace rrcbf
