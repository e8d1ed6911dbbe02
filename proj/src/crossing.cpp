#include "rrcbf/crossing.hpp"

#include <cmath>
#include <limits>

#include "rrcbf/errors.hpp"

namespace rrcbf {

namespace {
constexpr double kBracketLo = 1e-12;
constexpr double kBracketHi = 1e12;
}  // namespace

CrossingPoint solve_crossing(const ClassKFn& alpha, const ClassKFn& beta, double offset,
                             double sigma) {
  if (offset < 0.0) throw DomainError("solve_crossing: offset must be nonnegative");
  if (sigma < 0.0) throw DomainError("solve_crossing: sigma must be nonnegative");
  if (sigma > 0.0 && offset > 0.0) {
    const double limit = 1.0 / beta.inverse(offset);
    if (!(sigma < limit))
      throw DomainError("solve_crossing: sigma >= 1/beta^{-1}(offset), no positive root");
  }

  auto f = [&](double s) { return alpha(s) + offset - beta(1.0 / (s + sigma)); };

  int iters = 0;
  double lo = 1.0, hi = 1.0;
  double flo = f(lo), fhi = flo;
  while (flo > 0.0) {
    lo *= 0.125;
    if (lo < kBracketLo) throw NoRootError("solve_crossing: no sign change down to 1e-12");
    flo = f(lo);
    ++iters;
  }
  while (fhi < 0.0) {
    hi *= 8.0;
    if (hi > kBracketHi) throw NoRootError("solve_crossing: no sign change up to 1e12");
    fhi = f(hi);
    ++iters;
  }
  if (flo == 0.0) return {lo, 0.0, iters};
  if (fhi == 0.0) return {hi, 0.0, iters};

  // f is strictly increasing, so plain bisection converges unconditionally.
  double mid = 0.5 * (lo + hi), fmid = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    fmid = f(mid);
    ++iters;
    if (fmid == 0.0) break;
    (fmid < 0.0 ? lo : hi) = mid;
    if (hi - lo <= std::max(1e-13, 2.0 * eps * mid)) break;
  }
  mid = 0.5 * (lo + hi);
  return {mid, f(mid), iters};
}

}  // namespace rrcbf
