#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rrcbf/safe_function.hpp"

namespace rrcbf {

/// Control-affine plant with a single additive disturbance channel:
///   xdot = f(x) + g(x) u + e_{ch} w(t)
/// where w enters the component `disturbance_channel` with coefficient 1
/// (the convention both benchmarks use). The matched-disturbance picture of
/// the theory corresponds to d = w / g(x)[ch].
struct PlantModel {
  std::string name;
  int state_dim = 0;
  int input_dim = 1;

  std::function<Vector(const Vector&)> drift;      // f(x)
  std::function<Matrix(const Vector&)> input_map;  // g(x), state_dim x input_dim
  int disturbance_channel = 0;

  SafeFunctionSpec safe_fn;

  /// Nominal controller; d_hat_channel is the disturbance estimate in channel
  /// units (0 when no observer runs).
  std::function<double(const Vector&, double /*d_hat_channel*/, double /*t*/)> nominal;

  // Admissible box used only for diagnostic warnings.
  Vector admissible_lo, admissible_hi;
};

/// Parameters of the second-order linear benchmark
///   x1dot = -x2, x2dot = u + w, h = x1 - x2,
/// nominal u0 = x1 - 2 x2 - nominal_offset (offset 1 gives equilibrium (1,0)).
struct LinearBenchmarkParams {
  double nominal_offset = 1.0;
};

/// Physical parameters of the adaptive-cruise-control benchmark. States are
/// (v_l, v_e, D); u is the ego wheel force; the lumped disturbance enters
/// v_e-dot. The safety function b(D) = D - d0 has relative degree 2.
struct AccBenchmarkParams {
  double m = 1650.0;    // ego mass [kg]
  double f0 = 0.1;      // drag [N]
  double f1 = 5.0;      // drag [N s/m]
  double f2 = 0.25;     // drag [N s^2/m^2]
  double gravity = 9.81;
  double v_d = 20.0;    // desired cruise speed [m/s]
  double d0 = 80.0;     // distance threshold [m]
  double k_gain = 5.0;  // speed-tracking gain
  double a_l = 0.0;     // constant leader acceleration
};

PlantModel make_linear_benchmark(const LinearBenchmarkParams& params = {});
PlantModel make_acc_benchmark(const AccBenchmarkParams& params = {});

/// Bounded scalar disturbance signal. `bound()` is the declared bound the
/// signal never exceeds; uniform_hold draws are deterministic in (seed, t).
class DisturbanceSignal {
 public:
  static DisturbanceSignal zero();
  static DisturbanceSignal constant(double value);
  static DisturbanceSignal sine(double amp, double freq, double phase = 0.0);
  /// Sum of amp_i * sin(freq_i t + phase_i); bound is the sum of |amp_i|.
  static DisturbanceSignal sum_of_sines(std::vector<double> amps, std::vector<double> freqs,
                                        std::vector<double> phases);
  /// Piecewise-constant uniform draws in [-amp, amp], redrawn every hold_dt.
  static DisturbanceSignal uniform_hold(double amp, double hold_dt, std::uint64_t seed);

  double operator()(double t) const;
  double bound() const { return bound_; }

 private:
  enum class Kind { Zero, Constant, Sine, SumOfSines, UniformHold };
  Kind kind_ = Kind::Zero;
  double bound_ = 0.0;
  double value_ = 0.0;  // constant value / sine or hold amplitude
  double freq_ = 0.0, phase_ = 0.0;
  double hold_dt_ = 0.0;
  std::uint64_t seed_ = 0;
  std::vector<double> amps_, freqs_, phases_;
};

/// Sink for out-of-admissible-box diagnostics; evaluation proceeds so unsafe
/// excursions of failing variants still get logged.
struct WarningLog {
  long out_of_box = 0;
};

/// Full disturbed right-hand side f(x) + g(x) u + e_ch w.
Vector eval_dynamics(const PlantModel& plant, const Vector& x, double u, double w, double t,
                     WarningLog* warnings = nullptr);

/// Plant nominal controller (d_hat in channel units; pass 0 without observer).
double nominal_control(const PlantModel& plant, const Vector& x, double d_hat, double t);

}  // namespace rrcbf
