#include "rrcbf/safety_filter.hpp"

#include <algorithm>
#include <cmath>

#include "rrcbf/errors.hpp"

namespace rrcbf {

const char* filter_status_name(FilterStatus s) {
  switch (s) {
    case FilterStatus::Inactive: return "Inactive";
    case FilterStatus::Active: return "Active";
    case FilterStatus::ClampedFeasible: return "ClampedFeasible";
    case FilterStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

FilterStatus filter_status_from_name(const std::string& name) {
  if (name == "Inactive") return FilterStatus::Inactive;
  if (name == "Active") return FilterStatus::Active;
  if (name == "ClampedFeasible") return FilterStatus::ClampedFeasible;
  if (name == "Infeasible") return FilterStatus::Infeasible;
  throw DomainError("unknown filter status '" + name + "'");
}

FilterResult filter_scalar(double u0, const HalfspaceConstraint& c, double u_min, double u_max) {
  if (u_min > u_max) throw ConfigError("filter_scalar: u_min > u_max");
  if (c.a.size() != 1) throw ConfigError("filter_scalar: constraint must be one-dimensional");
  const double a = c.a[0], b = c.b;

  auto result = [&](double u, FilterStatus st) {
    FilterResult r;
    r.u_applied = Vector::Constant(1, u);
    r.status = st;
    r.slack = a * u + b;
    r.kkt_residual = st == FilterStatus::Active ? std::abs(r.slack) : 0.0;
    return r;
  };

  if (a == 0.0) {
    if (b >= 0.0) {
      const double u = std::clamp(u0, u_min, u_max);
      return result(u, u == u0 ? FilterStatus::Inactive : FilterStatus::ClampedFeasible);
    }
    // State-only constraint violated; every box point has the same slack.
    return result(std::clamp(u0, u_min, u_max), FilterStatus::Infeasible);
  }

  const double bound = -b / a;  // constraint boundary a u + b = 0
  const double lo = a > 0.0 ? std::max(u_min, bound) : u_min;
  const double hi = a > 0.0 ? u_max : std::min(u_max, bound);
  if (lo > hi) return result(a > 0.0 ? u_max : u_min, FilterStatus::Infeasible);

  const double u = std::clamp(u0, lo, hi);
  if (u == u0) return result(u, FilterStatus::Inactive);
  const bool constraint_binding = (u0 < lo) ? (a > 0.0 && bound >= u_min)
                                            : (a < 0.0 && bound <= u_max);
  return result(u, constraint_binding ? FilterStatus::Active : FilterStatus::ClampedFeasible);
}

FilterResult filter_projection(const Vector& u0, const HalfspaceConstraint& c) {
  if (c.a.size() != u0.size()) throw ConfigError("filter_projection: dimension mismatch");
  FilterResult r;
  const double norm2 = c.a.squaredNorm();
  const double value = c.a.dot(u0) + c.b;
  if (norm2 == 0.0) {
    r.u_applied = u0;
    r.status = c.b >= 0.0 ? FilterStatus::Inactive : FilterStatus::Infeasible;
    r.slack = c.b;
    return r;
  }
  if (value >= 0.0) {
    r.u_applied = u0;
    r.status = FilterStatus::Inactive;
    r.slack = value;
    return r;
  }
  r.u_applied = u0 + (-value / norm2) * c.a.transpose();
  r.status = FilterStatus::Active;
  r.slack = c.a.dot(r.u_applied) + c.b;
  r.kkt_residual = std::abs(r.slack);
  return r;
}

}  // namespace rrcbf
