#include "platoon/horizon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "platoon/errors.hpp"
#include "platoon/strategies.hpp"

namespace platoon {

long ceil_steps(double x) {
  return static_cast<long>(std::ceil(x - 1e-12));
}

double DCoefficients::ratio_at_excess(double dv) const {
  const double head = 2.0 * v0 + dv + 2.0 * tau * a_max;
  return (head - tau * a_min) / (head - 3.0 * tau * a_min);
}

DCoefficients d_coefficients(const ScenarioE1& sc) {
  DCoefficients d{sc.v0, sc.gp.tau, sc.vp.a_max, sc.vp.a_min, 0.0, 0.0};
  d.d0 = d.ratio_at_excess(sc.speed_excess());
  d.d_inf = d.ratio_at_excess(0.0);
  if (!(d.d_inf > 0.0 && d.d_inf < 1.0 && d.d0 > 0.0 && d.d0 < 1.0))
    throw std::invalid_argument("contraction ratios outside (0, 1)");
  return d;
}

TransitionBudget transition_budget(const ScenarioE1& sc) {
  const double tau = sc.gp.tau;
  TransitionBudget b{};
  b.cruise_term = ceil_steps(
      pos_part(sc.s1_0 - safe_distance(sc.gp.v_max, sc.v0, sc.vp, sc.gp)) /
      (tau * sc.gp.v_max));
  b.accel_term = ceil_steps((sc.gp.v_max - sc.v1_0) / (tau * sc.vp.a_max));

  const double s0 = sc.steady_spacing();
  if (sc.v1_0 < sc.v0) {
    b.situation = sc.s1_0 >= s0 ? Situation::SlowerWideGap
                                : Situation::SlowerShortGap;
    b.hold_term = ceil_steps(pos_part(s0 - sc.s1_0) / (sc.v0 - sc.v1_0));
  } else {
    if (sc.v1_0 == sc.v0 && sc.s1_0 < s0)
      throw DegenerateRate("hold-phase rate vanishes: follower exactly at "
                           "leader speed below steady spacing");
    b.situation = Situation::FasterThanLeader;
    b.hold_term = 0;
  }
  return b;
}

long rho_transition(const ScenarioE1& sc) {
  return transition_budget(sc).total();
}

KinematicTransition kinematic_transition(const ScenarioE1& sc) {
  const double tau = sc.gp.tau;
  const double tol = 1e-6;
  double v = sc.v1_0;
  double gap = sc.s1_0;
  long steps = 0;
  const long cap = 2'000'000;

  auto slack = [&](double gap_now, double v_now) {
    return gap_now - safe_distance(v_now, sc.v0, sc.vp, sc.gp);
  };

  if (slack(gap, v) <= tol && v >= sc.v0) return {0, true};

  // Speed-hold prefix while slower than the leader below steady spacing.
  if (v < sc.v0 && gap < sc.steady_spacing()) {
    while (gap < sc.steady_spacing()) {
      gap += tau * (sc.v0 - v);
      if (++steps > cap) return {std::nullopt, false};
    }
  }

  // Full-throttle climb capped at v_max, then cruise; stop when the safety
  // slack would close with the follower at or above the leader's speed.
  while (steps <= cap) {
    const double v_next = std::min(v + tau * sc.vp.a_max, sc.gp.v_max);
    const double gap_next = gap + tau * sc.v0 - tau * 0.5 * (v + v_next);
    ++steps;
    if (slack(gap_next, v_next) <= tol && v_next >= sc.v0)
      return {steps, true};
    // Cruising at the cap without closing: the boundary is out of reach.
    if (v_next == sc.gp.v_max && gap_next >= gap && slack(gap_next, v_next) > tol)
      return {std::nullopt, false};
    v = v_next;
    gap = gap_next;
  }
  return {std::nullopt, false};
}

static double rho_one_argument(const ScenarioE1& sc, double sigma) {
  const DCoefficients d = d_coefficients(sc);
  return 1.0 - (2.0 * (1.0 - d.d_inf) / (1.0 + d.d_inf)) *
                   (1.0 / (1.0 - d.d0) - sigma);
}

long rho_one(const ScenarioE1& sc, double sigma) {
  const double arg = rho_one_argument(sc, sigma);
  if (!(arg > 0.0 && arg <= 1.0))
    throw OutOfDomain("log argument " + std::to_string(arg) +
                          " outside (0, 1]",
                      arg);
  const double d_inf = d_coefficients(sc).d_inf;
  return ceil_steps(std::log(arg) / std::log(d_inf));
}

RhoOneInfo rho_one_info(const ScenarioE1& sc, double sigma) {
  RhoOneInfo info;
  info.log_argument = rho_one_argument(sc, sigma);
  info.in_domain = info.log_argument > 0.0 && info.log_argument <= 1.0;
  if (info.in_domain) {
    const double d_inf = d_coefficients(sc).d_inf;
    info.value = ceil_steps(std::log(info.log_argument) / std::log(d_inf));
  }
  return info;
}

std::optional<long> empirical_rho_one(const ScenarioE1& sc, long cap) {
  // Exact excess recursion of the braking law behind a constant-speed
  // leader; the gap shrinks by the trapezoid of the excess each step.
  const DCoefficients d = d_coefficients(sc);
  double dv = sc.speed_excess();
  double z = (sc.gp.delta1 + sc.gp.delta2) * sc.gp.tau * dv -
             sc.gp.delta_margin;
  for (long p = 0; p <= cap; ++p) {
    if (z <= 0.0) return p;
    const double dv_next = dv * d.ratio_at_excess(dv);
    z -= sc.gp.tau * 0.5 * (dv + dv_next);
    dv = dv_next;
  }
  return std::nullopt;
}

long rho_two(const ScenarioE1& sc) {
  return ceil_steps(sc.speed_excess() / (-sc.vp.a_min * sc.gp.tau));
}

HorizonBounds theorem1_bounds(const Scenario& scenario, double sigma) {
  HorizonBounds hb;
  hb.per_vehicle.reserve(scenario.platoon.size());
  for (std::size_t i = 0; i < scenario.platoon.size(); ++i) {
    const ScenarioE1 sc = scenario.as_e1(i);
    VehicleHorizon vh;
    vh.rho_t = rho_transition(sc);
    const RhoOneInfo info = rho_one_info(sc, sigma);
    vh.rho1_formula_in_domain = info.in_domain;
    vh.rho1_log_argument = info.log_argument;
    if (info.in_domain) {
      vh.rho_1 = info.value;
    } else {
      const auto empirical = empirical_rho_one(sc);
      if (!empirical)
        throw NoConvergence("vehicle " + std::to_string(i + 1) +
                            ": no finite spacing-error crossing");
      vh.rho_1 = *empirical;
      vh.rho1_empirical = true;
    }
    vh.rho_2 = rho_two(sc);
    vh.p_ei = vh.rho_t + vh.rho_1 + vh.rho_2;
    hb.per_vehicle.push_back(vh);
    hb.p_en_sum += vh.p_ei;
    hb.p_en_max = std::max(hb.p_en_max, vh.p_ei);
  }
  const VehicleHorizon& first = hb.per_vehicle.front();
  hb.rho_t = first.rho_t;
  hb.rho_1 = first.rho_1;
  hb.rho_2 = first.rho_2;
  hb.rho = first.rho_1 + first.rho_2;
  hb.p_e1 = first.p_ei;
  return hb;
}

long blended_horizon(const HorizonBounds& hb, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must lie in [0, 1]");
  return ceil_steps(lambda * static_cast<double>(hb.p_en_max) +
                    (1.0 - lambda) * static_cast<double>(hb.p_en_sum));
}

}  // namespace platoon
