#pragma once

#include "rrcbf/class_k.hpp"

namespace rrcbf {

/// Root of alpha(s) + offset = beta(1/(s + sigma)) on s > 0.
///
/// offset = 0, sigma = 0 gives the buffer-zone threshold h_s;
/// offset = D,  sigma = 0 gives the disturbed threshold h_b;
/// sigma > 0 gives the practical threshold h_p.
struct CrossingPoint {
  double h_s = 0.0;
  double residual = 0.0;  // alpha(h_s) + offset - beta(1/(h_s + sigma))
  int iterations = 0;
};

/// Solves alpha(s) + offset - beta(1/(s + sigma)) = 0 by geometric bracket
/// expansion from s = 1 followed by bisection. The left side is strictly
/// increasing in s, so the root is unique.
///
/// Preconditions: offset >= 0, sigma >= 0, and for sigma > 0 the bound
/// sigma < 1/beta^{-1}(offset) (otherwise no positive root exists).
CrossingPoint solve_crossing(const ClassKFn& alpha, const ClassKFn& beta, double offset = 0.0,
                             double sigma = 0.0);

}  // namespace rrcbf
