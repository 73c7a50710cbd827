#pragma once

#include <array>
#include <span>
#include <string>

#include "platoon/types.hpp"

namespace platoon {

// One-step feasible control interval of a vehicle: controls in [lo, hi] keep
// the acceleration box, the speed band and (when a predecessor is present)
// the safety constraint satisfied at the next step. The three constituent
// bounds are retained for diagnostics; a_upper_d is +inf when no predecessor
// constrains the vehicle.
struct FeasibleInterval {
  double lo = 0.0;
  double hi = 0.0;
  double a_lower_v = 0.0;
  double a_upper_v = 0.0;
  double a_upper_d = 0.0;
  bool non_empty = false;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double u, double slack = 0.0) const {
    return u >= lo - slack && u <= hi + slack;
  }
};

struct SpeedBounds {
  double lower;  // largest control still reaching v_min at k+1
  double upper;  // control landing exactly on v_max at k+1
};

// Controls in [lower, upper] keep v(k+1) inside [v_min, v_max] exactly.
SpeedBounds speed_bounds(const VehicleState& s, const VehicleParams& vp,
                         const GlobalParams& gp);

// Gap minus safe distance; >= 0 iff the safety constraint holds now.
double g_slack(const VehicleState& lead, const VehicleState& follow,
               const VehicleParams& vp, const GlobalParams& gp);

// Closed-form safety slack after one step, given the follower's control and
// the predecessor's committed realized acceleration for this step.
double g_next_closed_form(const VehicleState& lead, double lead_u_eff,
                          const VehicleState& follow, double u,
                          const VehicleParams& vp, const GlobalParams& gp);

// Largest control that keeps the safety slack nonnegative at k+1.
// `lead_u_eff` is the predecessor's committed realized acceleration over
// [k, k+1), i.e. (v_lead(k+1) - v_lead(k)) / tau; zero for a constant-speed
// leader. With delta2 = 1/2 the predecessor term drops out and only its next
// speed matters.
double safety_upper_bound(const VehicleState& lead, double lead_u_eff,
                          const VehicleState& follow, const VehicleParams& vp,
                          const GlobalParams& gp);

// Full interval for a vehicle with a predecessor.
FeasibleInterval feasible_interval(const VehicleState& lead, double lead_u_eff,
                                   const VehicleState& follow,
                                   const VehicleParams& vp,
                                   const GlobalParams& gp);

// Degenerate platoon of one: no safety bound.
FeasibleInterval feasible_interval(const VehicleState& follow,
                                   const VehicleParams& vp,
                                   const GlobalParams& gp);

// Smallest delta1 for which the interval is guaranteed non-empty from any
// feasible state (with delta2 = 1/2): max((v_min - v_max) /
// (tau*(a_min - eps*v_min)) - 1, 1).
double delta1_floor(const VehicleParams& vp, const GlobalParams& gp);

// Platoon-wide floor: the max over vehicles.
double delta1_floor(std::span<const VehicleParams> vps, const GlobalParams& gp);

// The six pairwise inequalities whose conjunction makes the interval
// non-empty, each with its slack value.
struct NonemptyReport {
  struct Entry {
    std::string name;
    double slack;
    bool ok;
  };
  std::array<Entry, 6> entries;
  bool all_ok = false;
};

NonemptyReport check_nonempty_inequalities(const VehicleState& lead,
                                           double lead_u_eff,
                                           const VehicleState& follow,
                                           const VehicleParams& vp,
                                           const GlobalParams& gp);

}  // namespace platoon
