#pragma once

#include "rrcbf/plants.hpp"

namespace rrcbf {

/// Nonlinear disturbance observer on the plant's disturbed channel with
/// linear auxiliary function p(x) = L x_d:
///   zdot = -L (z + L x_d) - L (f_d(x) + g_d(x) u),   w_hat = z + L x_d,
/// where x_d, f_d, g_d are the disturbed channel's state, drift component and
/// input coefficient. For smooth w the estimation error e = w - w_hat obeys
/// e-dot = -L e + w-dot, so constant disturbances are recovered at rate L.
/// w_hat is in channel units; divide by g_d to get the matched estimate the
/// observer-based constraints consume.
struct ObserverState {
  double z = 0.0;
  double gain = 10.0;  // L
};

/// z such that w_hat(x) equals w_hat0 (reproduction runs use w_hat0 = 0).
ObserverState make_observer(const PlantModel& plant, const Vector& x0, double gain,
                            double w_hat0 = 0.0);

double observer_w_hat(const ObserverState& obs, const PlantModel& plant, const Vector& x);

/// Matched (input-space) estimate w_hat / g_d(x) for the constraint builders.
double observer_d_hat_matched(const ObserverState& obs, const PlantModel& plant, const Vector& x);

/// zdot for the given frozen (x, u); used by the simulator to integrate the
/// observer jointly with the plant at the same dt and order.
double observer_zdot(const ObserverState& obs, const PlantModel& plant, const Vector& x, double u,
                     double z);

/// Standalone RK4 update of the auxiliary state with x and u held over the
/// step. Inside a closed-loop run prefer the joint integration the simulator
/// performs, which keeps the zero-disturbance estimate at exactly zero.
ObserverState observer_step(const ObserverState& obs, const PlantModel& plant, const Vector& x,
                            double u, double dt);

}  // namespace rrcbf
