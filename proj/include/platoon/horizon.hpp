#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "platoon/scenario.hpp"
#include "platoon/types.hpp"

namespace platoon {

// Ceiling with a 1e-12 pre-rounding nudge so that counts computed from
// algebraically exact ratios do not jump on representation error.
long ceil_steps(double x);

inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }

// Per-step contraction ratios of the follower's speed excess under the
// proportional braking law. The ratio is a function of the excess; d0 is its
// value at the initial excess and d_inf the limit as the excess vanishes.
struct DCoefficients {
  double v0;
  double tau;
  double a_max;
  double a_min;
  double d0;
  double d_inf;

  double ratio_at_excess(double dv) const;
  double ratio_at_delta(double delta_p) const {
    return ratio_at_excess(delta_p * v0);
  }
};

DCoefficients d_coefficients(const ScenarioE1& sc);

enum class Situation { FasterThanLeader, SlowerWideGap, SlowerShortGap };

struct TransitionBudget {
  long cruise_term;  // gap excess over the bound at v_max, counted at v_max
  long accel_term;   // full-throttle climb to v_max
  long hold_term;    // speed-hold phase for the short-gap situation
  Situation situation;
  long total() const { return cruise_term + accel_term + hold_term; }
};

// Step budget for transitioning an admissible scenario onto the safe-distance
// boundary. Throws DegenerateRate when the follower matches the leader's
// speed exactly while the gap is below the steady spacing (the hold-phase
// rate vanishes).
TransitionBudget transition_budget(const ScenarioE1& sc);
long rho_transition(const ScenarioE1& sc);

// Exact kinematic step count for the same transition, from a band-limited
// full-throttle rollout that ignores the safety envelope (the envelope-aware
// engine can only land earlier). steps is empty when the boundary is
// unreachable (leader at v_max with excess gap). The formula above is an
// upper bound only on scenarios where budget >= this count; the verifier
// classifies scenarios accordingly.
struct KinematicTransition {
  std::optional<long> steps;
  bool reachable = false;
};

KinematicTransition kinematic_transition(const ScenarioE1& sc);

// Steps for the proportional braking law to close the spacing error, from
// the logarithmic formula. Throws OutOfDomain when the argument leaves
// (0, 1]. sigma is the spacing-margin constant of the formula; it is
// configuration (see Config::sigma).
long rho_one(const ScenarioE1& sc, double sigma);

struct RhoOneInfo {
  bool in_domain = false;
  double log_argument = 0.0;
  long value = 0;  // valid only when in_domain
};

RhoOneInfo rho_one_info(const ScenarioE1& sc, double sigma);

// Crossing step of the spacing error under the exact excess recursion;
// empty when it does not cross within the step cap.
std::optional<long> empirical_rho_one(const ScenarioE1& sc,
                                      long cap = 100000);

// Steps for full braking to shed the initial speed excess.
long rho_two(const ScenarioE1& sc);

struct VehicleHorizon {
  long rho_t = 0;
  long rho_1 = 0;
  long rho_2 = 0;
  long p_ei = 0;
  bool rho1_formula_in_domain = false;
  double rho1_log_argument = 0.0;
  bool rho1_empirical = false;
};

struct HorizonBounds {
  long rho_t = 0;  // vehicle 1 values
  long rho_1 = 0;
  long rho_2 = 0;
  long rho = 0;
  long p_e1 = 0;
  std::vector<VehicleHorizon> per_vehicle;
  long p_en_sum = 0;
  long p_en_max = 0;
};

// Per-vehicle horizon lower bounds for a platoon behind a constant-speed
// leader, each computed with the vehicle's own acceleration limits. When the
// logarithmic formula is out of domain the empirical crossing step is used
// and flagged. Throws NoConvergence if neither route yields a finite count.
HorizonBounds theorem1_bounds(const Scenario& scenario, double sigma);

// Rounded-up convex combination of the max and the sum of the per-vehicle
// bounds; lambda = 0 gives the sum, lambda = 1 the max.
long blended_horizon(const HorizonBounds& hb, double lambda);

}  // namespace platoon
