#pragma once

#include <cstddef>
#include <vector>

namespace platoon {

// Physical and uncertainty constants of one controlled vehicle. `length` is
// the effective vehicle length including the standstill gap.
struct VehicleParams {
  double a_min = -5.0;  // m/s^2, < 0
  double a_max = 3.0;   // m/s^2, > 0
  double eps = 0.0;     // speed-proportional control loss, 1/s, >= 0
  double eta = 0.0;     // control-proportional loss, dimensionless, [0, 1)
  double length = 5.0;  // m, > 0

  void validate() const;
};

// Shared time step, speed band and spacing-policy coefficients.
struct GlobalParams {
  double tau = 0.1;          // s, > 0
  double v_min = 0.0;        // m/s, >= 0
  double v_max = 20.0;       // m/s, > v_min
  double delta1 = 1.0;       // headway coefficient, >= 1
  double delta2 = 0.5;       // relative-speed coefficient, >= 0
  double delta_margin = 2.0; // extra desired-spacing margin, m, >= 0

  void validate() const;
};

struct VehicleState {
  double x = 0.0;       // m
  double v = 0.0;       // m/s
  double u_prev = 0.0;  // control applied at the previous step, m/s^2
};

// Leader (index 0) followed by the controlled vehicles front to rear.
struct PlatoonState {
  VehicleState leader;
  std::vector<VehicleState> cavs;
  long step = 0;

  std::size_t size() const { return cavs.size(); }
  // Gap between CAV i (0-based) and the vehicle ahead of it.
  double gap(std::size_t i) const {
    return (i == 0 ? leader.x : cavs[i - 1].x) - cavs[i].x;
  }
  void validate() const;  // positions strictly decreasing front to rear
};

// Shifted-trajectory predictor constants: position now equals the upstream
// vehicle's position `shift_steps` ago, minus `shift_dist`.
struct NewellParams {
  long shift_steps = 1;     // >= 1
  double shift_dist = 10.0; // m, > 0

  void validate() const;
};

struct TrackingErrors {
  std::vector<double> z;        // spacing errors, m
  std::vector<double> z_prime;  // speed errors, m/s
};

}  // namespace platoon
