#include <doctest.h>

#include <cmath>

#include "rrcbf/errors.hpp"
#include "rrcbf/plants.hpp"
#include "rrcbf/scalar_rr.hpp"
#include "test_helpers.hpp"

using namespace rrcbf;
using rrcbf::testing::Rng;
using rrcbf::testing::uniform;

TEST_CASE("analytic solution: equilibrium, limit and direct evaluation") {
  const ScalarRrParams p{1.0, 4.0, 0.0};
  CHECK(analytic_solution(p, 2.0, 0.7) == doctest::Approx(2.0));   // z0 at sqrt(beta/alpha)
  CHECK(analytic_solution(p, 2.0, 13.0) == doctest::Approx(2.0));
  CHECK(analytic_solution(p, 1.0, 1e3) == doctest::Approx(2.0));   // limit sqrt(beta/alpha)
  const double expected = std::sqrt(4.0 - 3.0 * std::exp(-2.0));   // closed form at t = 1
  CHECK(analytic_solution(p, 1.0, 1.0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(1.89408).epsilon(1e-5));
}

TEST_CASE("analytic solution rejects nonpositive z0 and bad parameters") {
  CHECK_THROWS_AS(analytic_solution({1.0, 4.0, 0.0}, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(analytic_solution({1.0, 4.0, 0.0}, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(analytic_solution({0.0, 4.0, 0.0}, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(analytic_solution({1.0, -4.0, 0.0}, 1.0, 1.0), DomainError);
}

TEST_CASE("worst-case roots: undisturbed symmetric case and the (1,2,1) pair") {
  const auto sym = worst_case_roots({1.0, 1.0, 0.0});
  CHECK(sym.z1 == doctest::Approx(1.0));
  CHECK(sym.z2 == doctest::Approx(1.0));
  CHECK(sym.z_eq == doctest::Approx(1.0));

  const auto r = worst_case_roots({1.0, 2.0, 1.0});  // sqrt(1+8) = 3
  CHECK(r.z1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.z2 == doctest::Approx(2.0).epsilon(1e-14));

  CHECK(worst_case_roots({2.0, 8.0, 0.0}).z_eq == doctest::Approx(2.0));
}

TEST_CASE("worst-case root residuals vanish and obey the ordering invariant") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const ScalarRrParams p{uniform(rng, 0.1, 10.0), uniform(rng, 0.1, 10.0),
                           uniform(rng, 0.0, 10.0)};
    const auto r = worst_case_roots(p);
    CHECK(std::abs(-p.alpha * r.z1 * r.z1 - p.w_bar * r.z1 + p.beta) <= 1e-12);
    CHECK(std::abs(-p.alpha * r.z2 * r.z2 + p.w_bar * r.z2 + p.beta) <= 1e-12);
    CHECK(0.0 < r.z1);
    CHECK(r.z1 <= r.z_eq);
    CHECK(r.z_eq <= r.z2);
    if (p.w_bar == 0.0) CHECK(r.z1 == r.z2);
  }
}

TEST_CASE("zdot examples") {
  CHECK(zdot({1.0, 4.0, 0.0}, 2.0, 0.0) == doctest::Approx(0.0));    // equilibrium
  CHECK(zdot({1.0, 2.0, 1.0}, 1.0, -1.0) == doctest::Approx(0.0));   // z1 of (1,2,1)
  CHECK(zdot({1.0, 2.0, 1.0}, 0.5, -1.0) == doctest::Approx(2.5));   // inward flow
  CHECK_THROWS_AS(zdot({1.0, 2.0, 1.0}, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(zdot({1.0, 2.0, 1.0}, -0.5, 0.0), DomainError);
}

TEST_CASE("sign of zdot on the worst-case grid") {
  const ScalarRrParams p{1.3, 2.4, 0.8};
  const auto r = worst_case_roots(p);
  const int n = 1000;
  for (int i = 1; i <= n; ++i) {
    const double z_in = r.z1 * static_cast<double>(i) / n;
    const double z_out = r.z2 + (10.0 * r.z2 - r.z2) * static_cast<double>(i - 1) / (n - 1);
    for (double w : {-p.w_bar, 0.0, p.w_bar}) {
      CHECK(zdot(p, z_in, w) >= 0.0);
      CHECK(zdot(p, z_out, w) <= 0.0);
    }
  }
}

TEST_CASE("positivity under admissible disturbances (Lemma-level property)") {
  Rng rng(31);
  for (int draw = 0; draw < 20; ++draw) {
    const ScalarRrParams p{uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 4.0), uniform(rng, 0.0, 2.0)};
    const double z0 = uniform(rng, 0.1, 5.0);
    const double wb = p.w_bar;
    const auto hold =
        DisturbanceSignal::uniform_hold(wb, 0.05, static_cast<std::uint64_t>(draw));
    const std::function<double(double)> shapes[] = {
        [wb](double) { return wb; },
        [wb](double) { return -wb; },
        [wb](double t) { return wb * std::sin(10.0 * t); },
        [&hold](double t) { return hold(t); },
    };
    for (const auto& w : shapes) {
      const auto traj = simulate_scalar_rr(p, z0, w, 1e-3, 20.0);
      CHECK(traj.size() == 20001);
      for (const auto& s : traj) {
        if (!(s.z > 0.0)) {
          FAIL_CHECK("z <= 0 at t=" << s.t);
          break;
        }
      }
    }
  }
}

TEST_CASE("undisturbed simulation tracks the closed form at the endpoint") {
  const ScalarRrParams p{1.0, 4.0, 0.0};
  const auto traj = simulate_scalar_rr(p, 1.0, [](double) { return 0.0; }, 1e-3, 10.0);
  const auto& last = traj.back();
  CHECK(std::abs(last.z - analytic_solution(p, 1.0, last.t)) <= 1e-8);
}
