#include "rrcbf/class_k.hpp"

#include <algorithm>
#include <cmath>

#include "rrcbf/errors.hpp"

namespace rrcbf {

ClassKFn ClassKFn::linear(double gain) {
  if (!(gain > 0.0)) throw DomainError("ClassKFn::linear: gain must be positive");
  return ClassKFn(Linear{gain});
}

ClassKFn ClassKFn::power(double gain, double exponent) {
  if (!(gain > 0.0) || !(exponent > 0.0))
    throw DomainError("ClassKFn::power: gain and exponent must be positive");
  return ClassKFn(Power{gain, exponent});
}

ClassKFn ClassKFn::monotone_table(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw DomainError("ClassKFn::monotone_table: need at least 2 knots");
  bool has_origin = false;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (i > 0 && !(knots[i].first > knots[i - 1].first && knots[i].second > knots[i - 1].second))
      throw DomainError("ClassKFn::monotone_table: knots must be strictly increasing in s and y");
    if (knots[i].first == 0.0 && knots[i].second == 0.0) has_origin = true;
  }
  if (!has_origin) throw DomainError("ClassKFn::monotone_table: table must contain the knot (0,0)");
  return ClassKFn(Table{std::move(knots)});
}

namespace {

// Segment index such that knots[i].first <= s < knots[i+1].first, clamped
// to the end segments for extrapolation.
std::size_t segment(const std::vector<std::pair<double, double>>& k, double s) {
  if (s <= k.front().first) return 0;
  if (s >= k[k.size() - 2].first) return k.size() - 2;
  auto it = std::upper_bound(k.begin(), k.end(), s,
                             [](double v, const std::pair<double, double>& p) { return v < p.first; });
  return static_cast<std::size_t>(it - k.begin()) - 1;
}

std::size_t segment_y(const std::vector<std::pair<double, double>>& k, double y) {
  if (y <= k.front().second) return 0;
  if (y >= k[k.size() - 2].second) return k.size() - 2;
  auto it = std::upper_bound(k.begin(), k.end(), y,
                             [](double v, const std::pair<double, double>& p) { return v < p.second; });
  return static_cast<std::size_t>(it - k.begin()) - 1;
}

}  // namespace

double ClassKFn::evaluate(double s) const {
  if (const auto* l = std::get_if<Linear>(&impl_)) return l->gain * s;
  if (const auto* p = std::get_if<Power>(&impl_)) {
    if (s == 0.0) return 0.0;
    const double m = p->gain * std::pow(std::abs(s), p->exponent);
    return s > 0.0 ? m : -m;
  }
  const auto& k = std::get<Table>(impl_).knots;
  const std::size_t i = segment(k, s);
  const double t = (s - k[i].first) / (k[i + 1].first - k[i].first);
  return k[i].second + t * (k[i + 1].second - k[i].second);
}

double ClassKFn::inverse(double y) const {
  if (const auto* l = std::get_if<Linear>(&impl_)) return y / l->gain;
  if (const auto* p = std::get_if<Power>(&impl_)) {
    if (y == 0.0) return 0.0;
    const double m = std::pow(std::abs(y) / p->gain, 1.0 / p->exponent);
    return y > 0.0 ? m : -m;
  }
  const auto& k = std::get<Table>(impl_).knots;
  const std::size_t i = segment_y(k, y);
  const double t = (y - k[i].second) / (k[i + 1].second - k[i].second);
  return k[i].first + t * (k[i + 1].first - k[i].first);
}

double ClassKFn::slope(double s) const {
  if (const auto* l = std::get_if<Linear>(&impl_)) return l->gain;
  if (const auto* p = std::get_if<Power>(&impl_)) {
    if (s == 0.0 && p->exponent < 1.0) throw DomainError("ClassKFn::slope: infinite at 0");
    if (s == 0.0) return p->exponent == 1.0 ? p->gain : 0.0;
    return p->gain * p->exponent * std::pow(std::abs(s), p->exponent - 1.0);
  }
  const auto& k = std::get<Table>(impl_).knots;
  const std::size_t i = segment(k, s);
  return (k[i + 1].second - k[i].second) / (k[i + 1].first - k[i].first);
}

}  // namespace rrcbf
