#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace rrcbf {

/// A strictly increasing scalar function through the origin.
///
/// Three shapes are supported:
///   - linear:       s -> gain * s
///   - power:        s -> gain * sign(s) * |s|^exponent   (odd extension)
///   - monotone table: piecewise-linear through ordered knots, linear
///     extrapolation beyond the first/last knot. The table must contain
///     the knot (0, 0) so that evaluate(0) == 0 holds exactly.
///
/// Linear and power shapes are extended class-K (defined on all reals);
/// tables are extended as far as their knots plus extrapolation reach.
class ClassKFn {
 public:
  static ClassKFn linear(double gain);
  static ClassKFn power(double gain, double exponent);
  static ClassKFn monotone_table(std::vector<std::pair<double, double>> knots);

  double operator()(double s) const { return evaluate(s); }
  double evaluate(double s) const;

  /// Exact inverse for linear/power, interpolated inverse for tables.
  double inverse(double y) const;

  /// Local slope d/ds evaluate(s); piecewise-constant for tables.
  double slope(double s) const;

 private:
  struct Linear {
    double gain;
  };
  struct Power {
    double gain;
    double exponent;
  };
  struct Table {
    std::vector<std::pair<double, double>> knots;
  };

  explicit ClassKFn(std::variant<Linear, Power, Table> impl) : impl_(std::move(impl)) {}

  std::variant<Linear, Power, Table> impl_;
};

}  // namespace rrcbf
