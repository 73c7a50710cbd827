#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "platoon/dynamics.hpp"
#include "platoon/rng.hpp"
#include "platoon/types.hpp"

namespace platoon {

// Single controlled vehicle behind a constant-speed leader. The admissible
// form only requires the speed band and a gap at or above the safe distance;
// the boundary form additionally pins the gap exactly on the safe distance
// with the follower at or above the leader's speed.
struct ScenarioE1 {
  double v0 = 0.0;    // leader speed, held constant
  double v1_0 = 0.0;  // follower initial speed
  double s1_0 = 0.0;  // initial gap, m
  VehicleParams vp;
  GlobalParams gp;

  double speed_excess() const { return v1_0 - v0; }
  // Discrepancy ratio; meaningful only for v0 > 0.
  double delta0() const { return (v1_0 - v0) / v0; }
  // Spacing the follower settles at once both errors are zero.
  double steady_spacing() const { return desired_spacing(v0, v0, vp, gp); }
  double safe_gap_at_start() const { return safe_distance(v1_0, v0, vp, gp); }

  bool admissible() const;        // speed band + gap >= safe distance
  bool on_safe_boundary(double tol = 1e-9) const;
};

// Rolling state for one follower behind the constant-speed leader.
struct LeadFollow {
  VehicleState hdv;
  VehicleState cav;

  double gap() const { return hdv.x - cav.x; }
};

LeadFollow initial_state(const ScenarioE1& sc);

// Advance both vehicles one step; the leader holds its speed exactly.
LeadFollow advance(const LeadFollow& lf, double u, const ScenarioE1& sc);

// Errors relative to the steady state behind a constant-speed leader:
// spacing error = gap - steady_spacing, speed error = v1 - v0.
struct SteadyStateErrors {
  double spacing;  // m
  double speed;    // m/s
};

SteadyStateErrors steady_state_errors(const LeadFollow& lf,
                                      const ScenarioE1& sc);

enum class ScenarioKind { E1, EE1, EEN };

const char* to_string(ScenarioKind kind);

// Sampling knobs for the scenario generator. Speeds are uniform in their
// bands; gaps are the safe distance plus an exponential surplus with mean
// surplus_mean_factor * steady_spacing, truncated at surplus_cap_factor *
// steady_spacing (no cap when the factor is <= 0). Heterogeneity perturbs the
// per-vehicle acceleration limits by +-20%.
struct ScenarioSampling {
  double hdv_v_lo = -1.0;  // < 0 means use [v_min, v_max]
  double hdv_v_hi = -1.0;
  double cav_v_lo = -1.0;
  double cav_v_hi = -1.0;
  double surplus_mean_factor = 2.0;
  double surplus_cap_factor = 0.0;
  bool heterogeneity = false;
  bool delta1_auto = true;  // raise delta1 to the platoon floor
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::EE1;
  std::uint64_t seed = 0;
  PlatoonState platoon;
  std::vector<VehicleParams> vehicles;
  GlobalParams gp;
  double hdv_v0 = 0.0;  // constant leader speed
  std::optional<PositionSeries> hdv_trajectory;

  ScenarioE1 as_e1(std::size_t i = 0) const;
  void check_admission() const;  // throws on violated admission conditions
};

Scenario gen_scenario(ScenarioKind kind, std::uint64_t seed, std::size_t n,
                      const VehicleParams& base_vp, const GlobalParams& gp,
                      const ScenarioSampling& sampling = {});

}  // namespace platoon
