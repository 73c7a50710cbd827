#pragma once

#include <string>
#include <vector>

#include "platoon/feasibility.hpp"
#include "platoon/scenario.hpp"

namespace platoon {

enum class StrategyTag {
  Transition,   // drive onto the safe-distance boundary
  Shrink,       // proportional braking until the spacing error crosses zero
  Brake,        // full braking until the speed excess is shed
  Blended,      // shrink then brake, switch point tuned for both errors
  Regulator,    // proportional speed regulator toward the steady state
  Composite,
};

const char* to_string(StrategyTag tag);

struct ControlSequence {
  std::vector<double> controls;
  StrategyTag tag = StrategyTag::Transition;
  long switch_step = -1;  // first braking step of a blended profile

  long length() const { return static_cast<long>(controls.size()); }
};

struct FeasibilityCheck {
  bool ok = true;
  double worst_violation = 0.0;
  long first_bad_step = -1;
  std::string detail;
};

// Replay a control sequence from the scenario's initial state and check each
// control against its per-step feasible interval plus the band and safety
// constraints along the trajectory.
FeasibilityCheck validate_sequence(const ScenarioE1& sc,
                                   const ControlSequence& seq,
                                   double slack = 1e-9);

// Roll the sequence forward; returns the final lead/follower state.
LeadFollow replay(const ScenarioE1& sc, const ControlSequence& seq);

// Transition onto the safe-distance boundary at or above the leader's speed:
// maximum feasible control each step (full throttle until the speed cap or
// the safety envelope binds, then ride the binding bound), preceded by a
// speed-hold phase when starting slower than the leader below the steady
// spacing. Terminates at the first step with safety slack <= tol.
ControlSequence strategy_s1(const ScenarioE1& sc, double tol = 1e-6);

// Proportional braking control for a given speed excess; scales the excess
// by a fixed contraction ratio per step.
double shrink_control(const ScenarioE1& sc, double speed_excess);
double shrink_law(const ScenarioE1& sc, double delta_p);

struct ProfileOptions {
  bool clamp_to_envelope = true;
  long step_cap = 100000;
};

// From the boundary: apply the shrink control until the spacing error
// relative to the steady state crosses zero. Throws NoConvergence when it
// does not cross within the cap.
ControlSequence profile_to_zero_spacing(const ScenarioE1& sc,
                                        const ProfileOptions& opts = {});

// From the boundary with positive speed excess: full braking with an exact
// landing step on the leader's speed. Length equals the full-braking step
// bound; the speed error is exactly zero afterwards.
ControlSequence profile_brake(const ScenarioE1& sc);

struct BlendTolerance {
  double spacing = 1e-3;  // m
  double speed = 1e-3;    // m/s
};

// Shrink until a switch point, then brake to the leader's speed and hold.
// The switch point is bisected so both terminal errors vanish within
// tolerance. Throws NoSolution (with both endpoint terminal errors) when the
// endpoints do not bracket zero.
ControlSequence blended_profile(const ScenarioE1& sc, double sigma,
                                const BlendTolerance& tol = {});

// Proportional regulator toward the steady state; used where the blended
// construction does not apply (spacing error already at or below zero).
ControlSequence steady_regulator(const ScenarioE1& sc,
                                 const BlendTolerance& tol = {},
                                 long cap = 1000000);

// Full maneuver: transition to the boundary, then blended profile (falling
// back to the regulator when the blend premise fails).
ControlSequence maneuver_to_steady(const ScenarioE1& sc, double sigma,
                                   const BlendTolerance& tol = {});

}  // namespace platoon
