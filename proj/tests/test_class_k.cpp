#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rrcbf/class_k.hpp"
#include "rrcbf/errors.hpp"
#include "test_helpers.hpp"

using namespace rrcbf;
using rrcbf::testing::Rng;
using rrcbf::testing::random_class_k;
using rrcbf::testing::uniform;

TEST_CASE("class-K shapes evaluate as expected") {
  const auto lin = ClassKFn::linear(2.0);
  CHECK(lin(3.0) == 6.0);
  CHECK(lin(-1.5) == -3.0);
  CHECK(lin(0.0) == 0.0);

  const auto pow2 = ClassKFn::power(3.0, 2.0);
  CHECK(pow2(2.0) == doctest::Approx(12.0));
  CHECK(pow2(-2.0) == doctest::Approx(-12.0));  // odd extension
  CHECK(pow2(0.0) == 0.0);

  const auto tab = ClassKFn::monotone_table({{-1.0, -2.0}, {0.0, 0.0}, {1.0, 1.0}, {2.0, 4.0}});
  CHECK(tab(0.5) == doctest::Approx(0.5));
  CHECK(tab(1.5) == doctest::Approx(2.5));
  CHECK(tab(3.0) == doctest::Approx(7.0));   // linear extrapolation
  CHECK(tab(-0.5) == doctest::Approx(-1.0));
}

TEST_CASE("class-K construction rejects invalid parameters") {
  CHECK_THROWS_AS(ClassKFn::linear(0.0), DomainError);
  CHECK_THROWS_AS(ClassKFn::linear(-1.0), DomainError);
  CHECK_THROWS_AS(ClassKFn::power(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(ClassKFn::monotone_table({{0.0, 0.0}}), DomainError);
  CHECK_THROWS_AS(ClassKFn::monotone_table({{0.0, 0.0}, {1.0, -1.0}}), DomainError);
  CHECK_THROWS_AS(ClassKFn::monotone_table({{1.0, 1.0}, {2.0, 3.0}}), DomainError);  // no origin
}

TEST_CASE("class-K invariants: zero at zero, strictly increasing, inverse round-trip") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const ClassKFn f = random_class_k(rng);
    CHECK(f(0.0) == 0.0);
    for (int i = 0; i < 40; ++i) {
      double s1 = uniform(rng, -3.0, 3.0);
      double s2 = uniform(rng, -3.0, 3.0);
      if (s1 == s2) continue;
      if (s1 > s2) std::swap(s1, s2);
      CHECK(f(s1) < f(s2));

      const double s = uniform(rng, -3.0, 3.0);
      const double back = f.inverse(f(s));
      CHECK(back == doctest::Approx(s).epsilon(1e-9));
    }
  }
}

TEST_CASE("slope matches finite differences") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const ClassKFn f = random_class_k(rng);
    for (int i = 0; i < 10; ++i) {
      const double s = uniform(rng, 0.3, 2.5);
      const double d = 1e-7 * std::max(1.0, std::abs(s));
      const double fd = (f(s + d) - f(s - d)) / (2.0 * d);
      // table slopes are piecewise constant; skip points straddling a knot
      if (std::abs(f.slope(s + d) - f.slope(s - d)) > 1e-12) continue;
      CHECK(f.slope(s) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}
