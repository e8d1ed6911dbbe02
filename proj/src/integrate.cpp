#include "rrcbf/integrate.hpp"

#include <cmath>
#include <string>

#include "rrcbf/errors.hpp"

namespace rrcbf {

Vector rk4_step(const std::function<Vector(double, const Vector&)>& derivative, double t,
                const Vector& x, double dt) {
  if (!(dt > 0.0)) throw DomainError("rk4_step: dt must be positive");
  const Vector k1 = derivative(t, x);
  const Vector k2 = derivative(t + 0.5 * dt, x + 0.5 * dt * k1);
  const Vector k3 = derivative(t + 0.5 * dt, x + 0.5 * dt * k2);
  const Vector k4 = derivative(t + dt, x + dt * k3);
  Vector out = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!out.allFinite())
    throw IntegrationError("rk4_step: non-finite state after step at t=" + std::to_string(t));
  return out;
}

double rk4_step(const std::function<double(double, double)>& derivative, double t, double x,
                double dt) {
  if (!(dt > 0.0)) throw DomainError("rk4_step: dt must be positive");
  const double k1 = derivative(t, x);
  const double k2 = derivative(t + 0.5 * dt, x + 0.5 * dt * k1);
  const double k3 = derivative(t + 0.5 * dt, x + 0.5 * dt * k2);
  const double k4 = derivative(t + dt, x + dt * k3);
  const double out = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!std::isfinite(out))
    throw IntegrationError("rk4_step: non-finite state after step at t=" + std::to_string(t));
  return out;
}

}  // namespace rrcbf
