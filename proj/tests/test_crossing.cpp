#include <doctest.h>

#include <cmath>

#include "rrcbf/crossing.hpp"
#include "rrcbf/errors.hpp"
#include "test_helpers.hpp"

using namespace rrcbf;
using rrcbf::testing::Rng;
using rrcbf::testing::random_class_k;

TEST_CASE("crossing point of the linear (1,2) pair is sqrt(2)") {
  const auto cp = solve_crossing(ClassKFn::linear(1.0), ClassKFn::linear(2.0));
  CHECK(cp.h_s == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(cp.residual) <= 1e-10);
}

TEST_CASE("crossing point of equal unit gains is 1") {
  const auto cp = solve_crossing(ClassKFn::linear(1.0), ClassKFn::linear(1.0));
  CHECK(cp.h_s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("offset shifts the root: h + 1 = 2/h gives h = 1") {
  const auto cp = solve_crossing(ClassKFn::linear(1.0), ClassKFn::linear(2.0), 1.0);
  CHECK(cp.h_s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("crossing residual is tiny across random class-K pairs") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const ClassKFn alpha = random_class_k(rng);
    const ClassKFn beta = random_class_k(rng);
    const auto cp = solve_crossing(alpha, beta);
    CHECK(cp.h_s > 0.0);
    CHECK(std::abs(alpha(cp.h_s) - beta(1.0 / cp.h_s)) <= 1e-10);
  }
}

TEST_CASE("uniqueness: the defining function changes sign across the root") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const ClassKFn alpha = random_class_k(rng);
    const ClassKFn beta = random_class_k(rng);
    const auto cp = solve_crossing(alpha, beta);
    const double delta = 1e-6 * cp.h_s;
    auto f = [&](double s) { return alpha(s) - beta(1.0 / s); };
    CHECK(f(cp.h_s - delta) < 0.0);
    CHECK(f(cp.h_s + delta) > 0.0);
  }
}

TEST_CASE("root is monotone in the offset (h_b grows with the disturbance bound)") {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const ClassKFn alpha = random_class_k(rng);
    const ClassKFn beta = random_class_k(rng);
    const double hs = solve_crossing(alpha, beta, 0.0).h_s;
    double prev = hs;
    for (double offset : {0.5, 1.0, 2.0, 4.0}) {
      const double hb = solve_crossing(alpha, beta, offset).h_s;
      CHECK(hb < prev);
      prev = hb;
    }
  }
}

TEST_CASE("practical-RRBF premise: beta(1/sigma) - D stays positive for admissible sigma") {
  Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    const ClassKFn beta = random_class_k(rng);
    const double d_bound = rrcbf::testing::uniform(rng, 0.1, 5.0);
    const double sigma_limit = 1.0 / beta.inverse(d_bound);
    const double sigma = 0.5 * sigma_limit;
    CHECK(beta(1.0 / sigma) - d_bound > 0.0);
  }
}

TEST_CASE("sigma at or beyond the admissible limit is a precondition error") {
  const auto alpha = ClassKFn::linear(1.0);
  const auto beta = ClassKFn::linear(2.0);
  const double limit = 1.0 / beta.inverse(1.0);  // = 2
  CHECK_THROWS_AS(solve_crossing(alpha, beta, 1.0, limit), DomainError);
  CHECK_THROWS_AS(solve_crossing(alpha, beta, 1.0, 2.0 * limit), DomainError);
  CHECK_NOTHROW(solve_crossing(alpha, beta, 1.0, 0.5 * limit));
}
