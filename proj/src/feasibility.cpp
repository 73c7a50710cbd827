#include "platoon/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "platoon/dynamics.hpp"

namespace platoon {

SpeedBounds speed_bounds(const VehicleState& s, const VehicleParams& vp,
                         const GlobalParams& gp) {
  const double drift =
      (1.0 - gp.tau * vp.eps) * s.v + gp.tau * vp.eta * s.u_prev;
  const double denom = gp.tau * (1.0 - vp.eta);
  return {(gp.v_min - drift) / denom, (gp.v_max - drift) / denom};
}

double g_slack(const VehicleState& lead, const VehicleState& follow,
               const VehicleParams& vp, const GlobalParams& gp) {
  return lead.x - follow.x - safe_distance(follow.v, lead.v, vp, gp);
}

double g_next_closed_form(const VehicleState& lead, double lead_u_eff,
                          const VehicleState& follow, double u,
                          const VehicleParams& vp, const GlobalParams& gp) {
  const double tau = gp.tau;
  const double v_lead_next = lead.v + tau * lead_u_eff;
  const double follow_eff = effective_accel(u, follow, vp);
  return g_slack(lead, follow, vp, gp) + tau * (v_lead_next - follow.v) +
         tau * tau * (gp.delta2 - 0.5) * lead_u_eff -
         tau * tau * (gp.delta1 + gp.delta2 + 0.5) * follow_eff;
}

double safety_upper_bound(const VehicleState& lead, double lead_u_eff,
                          const VehicleState& follow, const VehicleParams& vp,
                          const GlobalParams& gp) {
  const double tau = gp.tau;
  const double coeff = gp.delta1 + gp.delta2 + 0.5;
  const double v_lead_next = lead.v + tau * lead_u_eff;
  const double g = g_slack(lead, follow, vp, gp);
  // Largest realized acceleration keeping the slack nonnegative, then solved
  // for the commanded control through the loss model.
  const double eff_limit = (g + tau * (v_lead_next - follow.v)) /
                               (tau * tau * coeff) +
                           (gp.delta2 - 0.5) * lead_u_eff / coeff;
  return (eff_limit + vp.eps * follow.v - vp.eta * follow.u_prev) /
         (1.0 - vp.eta);
}

static FeasibleInterval assemble_interval(const SpeedBounds& sb,
                                          double safety_hi,
                                          const VehicleParams& vp) {
  FeasibleInterval fi;
  fi.a_lower_v = sb.lower;
  fi.a_upper_v = sb.upper;
  fi.a_upper_d = safety_hi;
  fi.lo = std::max(vp.a_min, fi.a_lower_v);
  fi.hi = std::min({vp.a_max, fi.a_upper_v, fi.a_upper_d});
  fi.non_empty = fi.lo <= fi.hi;
  return fi;
}

FeasibleInterval feasible_interval(const VehicleState& lead, double lead_u_eff,
                                   const VehicleState& follow,
                                   const VehicleParams& vp,
                                   const GlobalParams& gp) {
  return assemble_interval(speed_bounds(follow, vp, gp),
                           safety_upper_bound(lead, lead_u_eff, follow, vp, gp),
                           vp);
}

FeasibleInterval feasible_interval(const VehicleState& follow,
                                   const VehicleParams& vp,
                                   const GlobalParams& gp) {
  return assemble_interval(speed_bounds(follow, vp, gp),
                           std::numeric_limits<double>::infinity(), vp);
}

double delta1_floor(const VehicleParams& vp, const GlobalParams& gp) {
  const double raw = (gp.v_min - gp.v_max) /
                         (gp.tau * (vp.a_min - vp.eps * gp.v_min)) -
                     1.0;
  return std::max(raw, 1.0);
}

double delta1_floor(std::span<const VehicleParams> vps,
                    const GlobalParams& gp) {
  double floor = 1.0;
  for (const auto& vp : vps) floor = std::max(floor, delta1_floor(vp, gp));
  return floor;
}

NonemptyReport check_nonempty_inequalities(const VehicleState& lead,
                                           double lead_u_eff,
                                           const VehicleState& follow,
                                           const VehicleParams& vp,
                                           const GlobalParams& gp) {
  const SpeedBounds sb = speed_bounds(follow, vp, gp);
  const double a_d = safety_upper_bound(lead, lead_u_eff, follow, vp, gp);
  NonemptyReport report;
  report.entries[0] = {"(i) a_max >= a_min", vp.a_max - vp.a_min, false};
  report.entries[1] = {"(ii) a_max >= speed_lower", vp.a_max - sb.lower,
                       false};
  report.entries[2] = {"(iii) speed_upper >= a_min", sb.upper - vp.a_min,
                       false};
  report.entries[3] = {"(iv) speed_upper >= speed_lower", sb.upper - sb.lower,
                       false};
  report.entries[4] = {"(v) safety_upper >= a_min", a_d - vp.a_min, false};
  report.entries[5] = {"(vi) safety_upper >= speed_lower", a_d - sb.lower,
                       false};
  report.all_ok = true;
  for (auto& e : report.entries) {
    e.ok = e.slack >= 0.0;
    report.all_ok = report.all_ok && e.ok;
  }
  return report;
}

}  // namespace platoon
