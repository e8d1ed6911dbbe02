#include "rrcbf/observer.hpp"

#include <cmath>

#include "rrcbf/errors.hpp"
#include "rrcbf/integrate.hpp"

namespace rrcbf {

ObserverState make_observer(const PlantModel& plant, const Vector& x0, double gain,
                            double w_hat0) {
  if (!(gain > 0.0)) throw DomainError("make_observer: gain must be positive");
  ObserverState obs;
  obs.gain = gain;
  obs.z = w_hat0 - gain * x0[plant.disturbance_channel];
  return obs;
}

double observer_w_hat(const ObserverState& obs, const PlantModel& plant, const Vector& x) {
  return obs.z + obs.gain * x[plant.disturbance_channel];
}

double observer_d_hat_matched(const ObserverState& obs, const PlantModel& plant, const Vector& x) {
  const double g_d = plant.input_map(x)(plant.disturbance_channel, 0);
  if (g_d == 0.0)
    throw ModelError("observer: input map vanishes on the disturbed channel, no matched estimate");
  return observer_w_hat(obs, plant, x) / g_d;
}

double observer_zdot(const ObserverState& obs, const PlantModel& plant, const Vector& x, double u,
                     double z) {
  const int ch = plant.disturbance_channel;
  const double f_d = plant.drift(x)[ch];
  const double g_d = plant.input_map(x)(ch, 0);
  const double L = obs.gain;
  return -L * (z + L * x[ch]) - L * (f_d + g_d * u);
}

ObserverState observer_step(const ObserverState& obs, const PlantModel& plant, const Vector& x,
                            double u, double dt) {
  auto rhs = [&](double, double z) { return observer_zdot(obs, plant, x, u, z); };
  ObserverState out = obs;
  out.z = rk4_step(std::function<double(double, double)>(rhs), 0.0, obs.z, dt);
  return out;
}

}  // namespace rrcbf
