#pragma once

#include <span>
#include <vector>

#include "platoon/types.hpp"

namespace platoon {

// Control loss at this step: eps*v(k) + eta*u(k) - eta*u(k-1). The realized
// acceleration is u minus this loss.
double control_loss(double u, const VehicleState& s, const VehicleParams& vp);

// Realized acceleration over [k, k+1): u(k) - control_loss.
double effective_accel(double u, const VehicleState& s,
                       const VehicleParams& vp);

// One exact discrete step of the double integrator with control loss.
VehicleState step_cav(const VehicleState& s, double u, const VehicleParams& vp,
                      const GlobalParams& gp);

// Control that lands v(k+1) exactly on v_target through the loss model.
double hold_speed_control(double v_target, const VehicleState& s,
                          const VehicleParams& vp, const GlobalParams& gp);

// Position record of an upstream vehicle, indexed by absolute step.
struct PositionSeries {
  long first_step = 0;
  std::vector<double> positions;

  bool contains(long step) const {
    return step >= first_step &&
           step < first_step + static_cast<long>(positions.size());
  }
  double at(long step) const { return positions[step - first_step]; }
};

// Shifted-trajectory prediction: upstream position at step k - shift_steps,
// displaced back by shift_dist. Throws InsufficientHistory when the record
// does not reach that far.
double predict_hdv(const PositionSeries& history, const NewellParams& np,
                   long step);

// Minimum admissible gap behind a predecessor:
// length + delta1*tau*v_follow + delta2*tau*(v_follow - v_lead).
double safe_distance(double v_follow, double v_lead, const VehicleParams& vp,
                     const GlobalParams& gp);

// safe_distance plus the extra margin; the spacing the controller tracks.
double desired_spacing(double v_follow, double v_lead, const VehicleParams& vp,
                       const GlobalParams& gp);

// Spacing and speed tracking errors for every controlled vehicle.
TrackingErrors tracking_errors(const PlatoonState& state,
                               std::span<const VehicleParams> vps,
                               const GlobalParams& gp);

}  // namespace platoon
