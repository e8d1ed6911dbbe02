#pragma once

#include <functional>

#include "rrcbf/safe_function.hpp"

namespace rrcbf {

/// Classical fourth-order Runge-Kutta step. The derivative is sampled at the
/// stage times; anything the caller wants held over the step (control,
/// disturbance) must already be bound into `derivative`. Throws
/// IntegrationError if a stage produces a non-finite value.
Vector rk4_step(const std::function<Vector(double, const Vector&)>& derivative, double t,
                const Vector& x, double dt);

/// Scalar convenience overload.
double rk4_step(const std::function<double(double, double)>& derivative, double t, double x,
                double dt);

}  // namespace rrcbf
