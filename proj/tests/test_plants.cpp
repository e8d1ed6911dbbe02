#include <doctest.h>

#include <cmath>

#include "rrcbf/plants.hpp"
#include "rrcbf/sim.hpp"
#include "test_helpers.hpp"

using namespace rrcbf;
using rrcbf::testing::Rng;
using rrcbf::testing::uniform;

TEST_CASE("linear benchmark dynamics and nominal controller") {
  const PlantModel p = make_linear_benchmark();
  Vector x(2);

  x << 1.0, 0.0;  // nominal equilibrium: u0 = 1 - 0 - 1 = 0
  CHECK(nominal_control(p, x, 0.0, 0.0) == doctest::Approx(0.0));
  const Vector eq = eval_dynamics(p, x, nominal_control(p, x, 0.0, 0.0), 0.0, 0.0);
  CHECK(eq.norm() == doctest::Approx(0.0));

  x << 0.0, 1.0;
  const Vector v = eval_dynamics(p, x, 0.0, 3.0, 0.0);
  CHECK(v[0] == doctest::Approx(-1.0));
  CHECK(v[1] == doctest::Approx(3.0));

  x << 0.0, 0.0;
  CHECK(nominal_control(p, x, 0.0, 0.0) == doctest::Approx(-1.0));
}

TEST_CASE("ACC dynamics and nominal controller") {
  const AccBenchmarkParams params;
  const PlantModel p = make_acc_benchmark(params);
  Vector x(3);

  x << 15.0, 0.0, 100.0;  // v_e = 0: only static drag
  CHECK(eval_dynamics(p, x, 0.0, 0.0, 0.0)[1] == doctest::Approx(-params.f0 / params.m));

  x << 15.0, params.v_d, 100.0;  // at speed: drag compensation only
  const double drag = params.f0 + params.f1 * params.v_d + params.f2 * params.v_d * params.v_d;
  CHECK(nominal_control(p, x, 0.0, 0.0) == doctest::Approx(drag));
}

TEST_CASE("drift and input map are Lipschitz on the admissible box (spot check)") {
  Rng rng(41);
  for (const auto& p : {make_linear_benchmark(), make_acc_benchmark()}) {
    for (int i = 0; i < 50; ++i) {
      Vector a(p.state_dim), b(p.state_dim);
      for (int j = 0; j < p.state_dim; ++j) {
        a[j] = uniform(rng, p.admissible_lo[j], p.admissible_hi[j]);
        b[j] = uniform(rng, p.admissible_lo[j], p.admissible_hi[j]);
      }
      const double dx = (a - b).norm();
      if (dx < 1e-9) continue;
      CHECK((p.drift(a) - p.drift(b)).norm() / dx < 1e4);
      CHECK((p.input_map(a) - p.input_map(b)).norm() / dx < 1e4);
    }
  }
}

TEST_CASE("ACC safe function has relative degree 2 numerically") {
  const AccBenchmarkParams params;
  const PlantModel p = make_acc_benchmark(params);
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    Vector x(3);
    x << uniform(rng, 0, 40), uniform(rng, 0, 40), uniform(rng, 10, 500);
    const Vector grad = p.safe_fn.grad_h(x);
    const double lgb = (grad.transpose() * p.input_map(x))(0, 0);
    CHECK(std::abs(lgb) <= 1e-12);
    const Vector grad_lfb = p.safe_fn.grad_lf_h(x);
    const double lglfb = (grad_lfb.transpose() * p.input_map(x))(0, 0);
    CHECK(std::abs(lglfb + 1.0 / params.m) <= 1e-9);
  }
}

TEST_CASE("disturbance signals respect their declared bound") {
  Rng rng(43);
  const auto signals = {
      DisturbanceSignal::zero(),
      DisturbanceSignal::constant(-2.5),
      DisturbanceSignal::sine(3.0, 1.0, 0.4),
      DisturbanceSignal::sum_of_sines({1.0, -0.5}, {1.0, 2.0}, {0.0, 0.0}),
      DisturbanceSignal::uniform_hold(1.7, 0.1, 77),
  };
  for (const auto& s : signals) {
    for (int i = 0; i < 2000; ++i) {
      const double t = uniform(rng, 0.0, 100.0);
      CHECK(std::abs(s(t)) <= s.bound() + 1e-12);
    }
  }
}

TEST_CASE("uniform_hold is deterministic and piecewise constant") {
  const auto s = DisturbanceSignal::uniform_hold(2.0, 0.25, 123);
  const auto s2 = DisturbanceSignal::uniform_hold(2.0, 0.25, 123);
  CHECK(s(0.3) == s2(0.3));
  CHECK(s(0.26) == s(0.49));   // same hold interval
  CHECK(s(10.0) == s(10.2));
  const auto other = DisturbanceSignal::uniform_hold(2.0, 0.25, 124);
  CHECK(s(0.3) != other(0.3));
}

TEST_CASE("nominal-only closed loop converges (no filter, no disturbance)") {
  // linear benchmark to (1, 0) within 1% by t = 10
  ScenarioConfig lin;
  lin.plant_kind = "linear2d";
  lin.variant_kind = "none";
  lin.initial_state = {3.0, 1.0};
  lin.horizon = 10.0;
  const auto lt = run_scenario(lin);
  const Vector xf = lt.records.back().x;
  CHECK(std::abs(xf[0] - 1.0) <= 0.01);
  CHECK(std::abs(xf[1]) <= 0.01);

  // ACC to v_e = v_d within 0.5% by t = 10
  ScenarioConfig acc;
  acc.plant_kind = "acc";
  acc.variant_kind = "none";
  acc.initial_state = {15.0, 15.0, 1000.0};  // large gap, speed control only
  acc.horizon = 10.0;
  const auto at = run_scenario(acc);
  CHECK(std::abs(at.records.back().x[1] - 20.0) / 20.0 <= 0.005);
}

TEST_CASE("out-of-box states are recorded as warnings, evaluation proceeds") {
  const PlantModel p = make_linear_benchmark();
  WarningLog log;
  Vector x(2);
  x << 1000.0, 0.0;
  const Vector v = eval_dynamics(p, x, 0.0, 0.0, 0.0, &log);
  CHECK(v.allFinite());
  CHECK(log.out_of_box == 1);
}
