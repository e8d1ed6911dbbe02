#include "rrcbf/plants.hpp"

#include <cmath>

#include "rrcbf/errors.hpp"

namespace rrcbf {

PlantModel make_linear_benchmark(const LinearBenchmarkParams& params) {
  PlantModel p;
  p.name = "linear2d";
  p.state_dim = 2;
  p.input_dim = 1;
  p.drift = [](const Vector& x) {
    Vector f(2);
    f << -x[1], 0.0;
    return f;
  };
  p.input_map = [](const Vector&) {
    Matrix g(2, 1);
    g << 0.0, 1.0;
    return g;
  };
  p.disturbance_channel = 1;
  p.safe_fn.h = [](const Vector& x) { return x[0] - x[1]; };
  p.safe_fn.grad_h = [](const Vector&) {
    Vector g(2);
    g << 1.0, -1.0;
    return g;
  };
  p.safe_fn.relative_degree = 1;
  const double c = params.nominal_offset;
  p.nominal = [c](const Vector& x, double, double) { return x[0] - 2.0 * x[1] - c; };
  p.admissible_lo = Vector::Constant(2, -100.0);
  p.admissible_hi = Vector::Constant(2, 100.0);
  return p;
}

PlantModel make_acc_benchmark(const AccBenchmarkParams& params) {
  if (!(params.m > 0.0)) throw DomainError("make_acc_benchmark: mass must be positive");
  PlantModel p;
  p.name = "acc";
  p.state_dim = 3;
  p.input_dim = 1;
  const double m = params.m, f0 = params.f0, f1 = params.f1, f2 = params.f2;
  auto drag = [f0, f1, f2](double ve) { return f0 + f1 * ve + f2 * ve * ve; };
  const double a_l = params.a_l;
  p.drift = [drag, m, a_l](const Vector& x) {
    Vector f(3);
    f << a_l, -drag(x[1]) / m, x[0] - x[1];
    return f;
  };
  p.input_map = [m](const Vector&) {
    Matrix g(3, 1);
    g << 0.0, 1.0 / m, 0.0;
    return g;
  };
  p.disturbance_channel = 1;
  const double d0 = params.d0;
  p.safe_fn.h = [d0](const Vector& x) { return x[2] - d0; };
  p.safe_fn.grad_h = [](const Vector&) {
    Vector g(3);
    g << 0.0, 0.0, 1.0;
    return g;
  };
  p.safe_fn.relative_degree = 2;
  p.safe_fn.lf_h = [](const Vector& x) { return x[0] - x[1]; };
  p.safe_fn.grad_lf_h = [](const Vector&) {
    Vector g(3);
    g << 1.0, -1.0, 0.0;
    return g;
  };
  const double k = params.k_gain, v_d = params.v_d;
  p.nominal = [m, k, v_d, drag](const Vector& x, double d_hat, double) {
    const double e_v = x[1] - v_d;
    return -m * (k * e_v - drag(x[1]) / m + d_hat);
  };
  p.admissible_lo = Vector(3);
  p.admissible_lo << -10.0, -10.0, 0.0;
  p.admissible_hi = Vector(3);
  p.admissible_hi << 60.0, 60.0, 2000.0;
  return p;
}

// ---------------------------------------------------------------------------
// DisturbanceSignal

DisturbanceSignal DisturbanceSignal::zero() { return {}; }

DisturbanceSignal DisturbanceSignal::constant(double value) {
  DisturbanceSignal s;
  s.kind_ = Kind::Constant;
  s.value_ = value;
  s.bound_ = std::abs(value);
  return s;
}

DisturbanceSignal DisturbanceSignal::sine(double amp, double freq, double phase) {
  DisturbanceSignal s;
  s.kind_ = Kind::Sine;
  s.value_ = amp;
  s.freq_ = freq;
  s.phase_ = phase;
  s.bound_ = std::abs(amp);
  return s;
}

DisturbanceSignal DisturbanceSignal::sum_of_sines(std::vector<double> amps,
                                                  std::vector<double> freqs,
                                                  std::vector<double> phases) {
  if (amps.size() != freqs.size() || amps.size() != phases.size() || amps.empty())
    throw DomainError("sum_of_sines: amps/freqs/phases must be nonempty and equal length");
  DisturbanceSignal s;
  s.kind_ = Kind::SumOfSines;
  s.amps_ = std::move(amps);
  s.freqs_ = std::move(freqs);
  s.phases_ = std::move(phases);
  for (double a : s.amps_) s.bound_ += std::abs(a);
  return s;
}

DisturbanceSignal DisturbanceSignal::uniform_hold(double amp, double hold_dt, std::uint64_t seed) {
  if (!(amp >= 0.0) || !(hold_dt > 0.0))
    throw DomainError("uniform_hold: need amp >= 0 and hold_dt > 0");
  DisturbanceSignal s;
  s.kind_ = Kind::UniformHold;
  s.value_ = amp;
  s.hold_dt_ = hold_dt;
  s.seed_ = seed;
  s.bound_ = amp;
  return s;
}

namespace {
// splitmix64: deterministic stateless hash so uniform_hold is O(1) random
// access in t and reproducible across threads.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

double DisturbanceSignal::operator()(double t) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Constant:
      return value_;
    case Kind::Sine:
      return value_ * std::sin(freq_ * t + phase_);
    case Kind::SumOfSines: {
      double v = 0.0;
      for (std::size_t i = 0; i < amps_.size(); ++i)
        v += amps_[i] * std::sin(freqs_[i] * t + phases_[i]);
      return v;
    }
    case Kind::UniformHold: {
      const auto idx = static_cast<std::uint64_t>(std::floor(t / hold_dt_));
      const std::uint64_t bits = splitmix64(seed_ ^ (idx * 0x9e3779b97f4a7c15ULL + 1));
      const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0,1)
      return value_ * (2.0 * u - 1.0);
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------

Vector eval_dynamics(const PlantModel& plant, const Vector& x, double u, double w, double t,
                     WarningLog* warnings) {
  (void)t;
  if (warnings != nullptr && plant.admissible_lo.size() == x.size()) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i] < plant.admissible_lo[i] || x[i] > plant.admissible_hi[i]) {
        ++warnings->out_of_box;
        break;
      }
    }
  }
  Vector xdot = plant.drift(x) + plant.input_map(x).col(0) * u;
  xdot[plant.disturbance_channel] += w;
  return xdot;
}

double nominal_control(const PlantModel& plant, const Vector& x, double d_hat, double t) {
  return plant.nominal(x, d_hat, t);
}

}  // namespace rrcbf
