#include "platoon/dynamics.hpp"

#include <stdexcept>
#include <string>

#include "platoon/errors.hpp"

namespace platoon {

void VehicleParams::validate() const {
  if (!(a_min < 0.0 && a_max > 0.0))
    throw std::invalid_argument("vehicle: requires a_min < 0 < a_max");
  if (!(eta >= 0.0 && eta < 1.0))
    throw std::invalid_argument("vehicle: requires 0 <= eta < 1");
  if (!(eps >= 0.0)) throw std::invalid_argument("vehicle: requires eps >= 0");
  if (!(length > 0.0))
    throw std::invalid_argument("vehicle: requires length > 0");
}

void GlobalParams::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("global: requires tau > 0");
  if (!(v_min >= 0.0))
    throw std::invalid_argument("global: requires v_min >= 0");
  if (!(v_min < v_max))
    throw std::invalid_argument("global: requires v_min < v_max");
  if (!(delta1 >= 1.0))
    throw std::invalid_argument("global: requires delta1 >= 1");
  if (!(delta2 >= 0.0))
    throw std::invalid_argument("global: requires delta2 >= 0");
  if (!(delta_margin >= 0.0))
    throw std::invalid_argument("global: requires delta_margin >= 0");
}

void PlatoonState::validate() const {
  double ahead = leader.x;
  for (std::size_t i = 0; i < cavs.size(); ++i) {
    if (!(ahead > cavs[i].x))
      throw std::invalid_argument("platoon: positions must strictly decrease "
                                  "front to rear at vehicle " +
                                  std::to_string(i + 1));
    ahead = cavs[i].x;
  }
}

void NewellParams::validate() const {
  if (shift_steps < 1)
    throw std::invalid_argument("newell: requires shift_steps >= 1");
  if (!(shift_dist > 0.0))
    throw std::invalid_argument("newell: requires shift_dist > 0");
}

double control_loss(double u, const VehicleState& s, const VehicleParams& vp) {
  return vp.eps * s.v + vp.eta * u - vp.eta * s.u_prev;
}

double effective_accel(double u, const VehicleState& s,
                       const VehicleParams& vp) {
  return u - control_loss(u, s, vp);
}

VehicleState step_cav(const VehicleState& s, double u, const VehicleParams& vp,
                      const GlobalParams& gp) {
  const double a = effective_accel(u, s, vp);
  VehicleState next;
  next.x = s.x + gp.tau * s.v + 0.5 * gp.tau * gp.tau * a;
  next.v = s.v + gp.tau * a;
  next.u_prev = u;
  return next;
}

double hold_speed_control(double v_target, const VehicleState& s,
                          const VehicleParams& vp, const GlobalParams& gp) {
  return (v_target - (1.0 - gp.tau * vp.eps) * s.v -
          gp.tau * vp.eta * s.u_prev) /
         (gp.tau * (1.0 - vp.eta));
}

double predict_hdv(const PositionSeries& history, const NewellParams& np,
                   long step) {
  const long source = step - np.shift_steps;
  if (!history.contains(source))
    throw InsufficientHistory("no recorded position at step " +
                              std::to_string(source));
  return history.at(source) - np.shift_dist;
}

double safe_distance(double v_follow, double v_lead, const VehicleParams& vp,
                     const GlobalParams& gp) {
  return vp.length + gp.delta1 * gp.tau * v_follow +
         gp.delta2 * gp.tau * (v_follow - v_lead);
}

double desired_spacing(double v_follow, double v_lead, const VehicleParams& vp,
                       const GlobalParams& gp) {
  return safe_distance(v_follow, v_lead, vp, gp) + gp.delta_margin;
}

TrackingErrors tracking_errors(const PlatoonState& state,
                               std::span<const VehicleParams> vps,
                               const GlobalParams& gp) {
  TrackingErrors errors;
  errors.z.reserve(state.size());
  errors.z_prime.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    const VehicleState& ahead = (i == 0) ? state.leader : state.cavs[i - 1];
    const VehicleState& self = state.cavs[i];
    errors.z.push_back(ahead.x - self.x -
                       desired_spacing(self.v, ahead.v, vps[i], gp));
    errors.z_prime.push_back(ahead.v - self.v);
  }
  return errors;
}

}  // namespace platoon
