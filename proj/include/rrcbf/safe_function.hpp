#pragma once

#include <Eigen/Dense>
#include <functional>

#include "rrcbf/class_k.hpp"

namespace rrcbf {

using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Matrix = Eigen::MatrixXd;

/// Scalar safety function h with its gradient and, for relative degree
/// r >= 2, optional analytic helpers for the first Lie derivative. When a
/// helper is absent the psi-chain builder falls back to central finite
/// differences.
struct SafeFunctionSpec {
  std::function<double(const Vector&)> h;
  std::function<Vector(const Vector&)> grad_h;
  int relative_degree = 1;

  // Optional analytic evaluators (supplied per plant).
  std::function<double(const Vector&)> lf_h;        // L_f h
  std::function<Vector(const Vector&)> grad_lf_h;   // grad of L_f h
};

/// Max relative mismatch between grad_h and a central finite difference of h
/// over the components at x. Used by the gradient-check tests.
double gradient_check(const SafeFunctionSpec& spec, const Vector& x, double step = 1e-6);

/// L_f h(x) + alpha(h(x)) - beta(1/(h(x) + sigma)) for the drift-only system.
/// Nonnegativity of this value over Int C certifies the (practical) RRBF
/// condition. Throws SingularityError when h + sigma is inside the singular
/// band (0, 1e-12].
double rrbf_residual(const SafeFunctionSpec& spec,
                     const std::function<Vector(const Vector&)>& plant_drift, const Vector& x,
                     const ClassKFn& alpha, const ClassKFn& beta, double sigma = 0.0);

}  // namespace rrcbf
