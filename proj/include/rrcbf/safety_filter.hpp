#pragma once

#include "rrcbf/constraints.hpp"

namespace rrcbf {

enum class FilterStatus { Inactive, Active, ClampedFeasible, Infeasible };

const char* filter_status_name(FilterStatus s);
FilterStatus filter_status_from_name(const std::string& name);

struct FilterResult {
  Vector u_applied;
  FilterStatus status = FilterStatus::Inactive;
  double slack = 0.0;         // a.u + b at the solution
  double kkt_residual = 0.0;  // |a.u + b| when the constraint is active
};

/// Exact solution of min (u - u0)^2 s.t. a u + b >= 0, u in [u_min, u_max]
/// for scalar input: project u0 onto the feasible interval. If that interval
/// is empty, returns the box endpoint with the larger a u + b and flags
/// Infeasible so simulations continue with the violation visible in logs.
FilterResult filter_scalar(double u0, const HalfspaceConstraint& c, double u_min, double u_max);

/// Closed-form projection of u0 onto the halfspace a.u + b >= 0 (no box):
/// u = u0 + max(0, -(a.u0 + b)) / |a|^2 a. A zero row with b < 0 yields
/// status Infeasible with u0 returned unchanged.
FilterResult filter_projection(const Vector& u0, const HalfspaceConstraint& c);

}  // namespace rrcbf
