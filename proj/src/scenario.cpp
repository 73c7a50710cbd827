#include "platoon/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "platoon/feasibility.hpp"

namespace platoon {

bool ScenarioE1::admissible() const {
  return v1_0 >= gp.v_min && v1_0 <= gp.v_max && v0 >= gp.v_min &&
         v0 <= gp.v_max && s1_0 >= safe_gap_at_start() - 1e-9;
}

bool ScenarioE1::on_safe_boundary(double tol) const {
  return std::abs(s1_0 - safe_gap_at_start()) <= tol && v1_0 >= v0 - tol &&
         v1_0 <= gp.v_max + tol;
}

LeadFollow initial_state(const ScenarioE1& sc) {
  LeadFollow lf;
  lf.hdv = {sc.s1_0, sc.v0, 0.0};
  lf.cav = {0.0, sc.v1_0, 0.0};
  return lf;
}

LeadFollow advance(const LeadFollow& lf, double u, const ScenarioE1& sc) {
  LeadFollow next;
  next.hdv = {lf.hdv.x + sc.gp.tau * sc.v0, sc.v0, 0.0};
  next.cav = step_cav(lf.cav, u, sc.vp, sc.gp);
  return next;
}

SteadyStateErrors steady_state_errors(const LeadFollow& lf,
                                      const ScenarioE1& sc) {
  return {lf.gap() - sc.steady_spacing(), lf.cav.v - sc.v0};
}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::E1: return "E1";
    case ScenarioKind::EE1: return "EE1";
    case ScenarioKind::EEN: return "EEN";
  }
  return "?";
}

ScenarioE1 Scenario::as_e1(std::size_t i) const {
  ScenarioE1 sc;
  sc.v0 = hdv_v0;
  sc.v1_0 = platoon.cavs[i].v;
  sc.s1_0 = platoon.gap(i);
  sc.vp = vehicles[i];
  sc.gp = gp;
  return sc;
}

void Scenario::check_admission() const {
  platoon.validate();
  auto in_band = [&](double v) { return v >= gp.v_min && v <= gp.v_max; };
  if (!in_band(hdv_v0)) throw std::runtime_error("scenario: leader speed outside band");
  for (std::size_t i = 0; i < platoon.size(); ++i) {
    const VehicleState& self = platoon.cavs[i];
    const VehicleState& ahead = (i == 0) ? platoon.leader : platoon.cavs[i - 1];
    if (!in_band(self.v))
      throw std::runtime_error("scenario: vehicle " + std::to_string(i + 1) +
                               " speed outside band");
    const double gap = ahead.x - self.x;
    const double safe = safe_distance(self.v, ahead.v, vehicles[i], gp);
    if (gap < safe - 1e-9)
      throw std::runtime_error("scenario: vehicle " + std::to_string(i + 1) +
                               " below safe distance");
    if (kind == ScenarioKind::E1 && i == 0) {
      if (std::abs(gap - safe) > 1e-9 || self.v < hdv_v0 - 1e-12)
        throw std::runtime_error("scenario: boundary conditions violated");
    }
  }
}

static VehicleParams sample_vehicle(const VehicleParams& base, bool heterogeneity,
                                    Rng& rng) {
  VehicleParams vp = base;
  if (heterogeneity) {
    vp.a_min = base.a_min * rng.uniform(0.8, 1.2);
    vp.a_max = base.a_max * rng.uniform(0.8, 1.2);
  }
  return vp;
}

Scenario gen_scenario(ScenarioKind kind, std::uint64_t seed, std::size_t n,
                      const VehicleParams& base_vp, const GlobalParams& gp,
                      const ScenarioSampling& sampling) {
  base_vp.validate();
  gp.validate();
  Rng rng(seed);

  Scenario sc;
  sc.kind = kind;
  sc.seed = seed;
  sc.gp = gp;
  if (kind != ScenarioKind::EEN) n = 1;

  const double hdv_lo = sampling.hdv_v_lo >= 0.0 ? sampling.hdv_v_lo : gp.v_min;
  const double hdv_hi = sampling.hdv_v_hi >= 0.0
                            ? std::min(sampling.hdv_v_hi, gp.v_max)
                            : gp.v_max;
  sc.hdv_v0 = rng.uniform(hdv_lo, hdv_hi);
  sc.platoon.leader = {0.0, sc.hdv_v0, 0.0};
  sc.platoon.step = 0;

  for (std::size_t i = 0; i < n; ++i)
    sc.vehicles.push_back(sample_vehicle(base_vp, sampling.heterogeneity, rng));
  if (sampling.delta1_auto)
    sc.gp.delta1 = std::max(sc.gp.delta1, delta1_floor(sc.vehicles, sc.gp));

  double lead_x = 0.0;
  double lead_v = sc.hdv_v0;
  for (std::size_t i = 0; i < n; ++i) {
    double v_lo = sampling.cav_v_lo >= 0.0 ? sampling.cav_v_lo : sc.gp.v_min;
    double v_hi = sampling.cav_v_hi >= 0.0
                      ? std::min(sampling.cav_v_hi, sc.gp.v_max)
                      : sc.gp.v_max;
    if (kind == ScenarioKind::E1) v_lo = std::max(v_lo, sc.hdv_v0);
    const double v = rng.uniform(v_lo, v_hi);

    const double safe = safe_distance(v, lead_v, sc.vehicles[i], sc.gp);
    const double steady = desired_spacing(sc.hdv_v0, sc.hdv_v0,
                                          sc.vehicles[i], sc.gp);
    double surplus = 0.0;
    if (kind != ScenarioKind::E1) {
      surplus = rng.exponential(sampling.surplus_mean_factor * steady);
      if (sampling.surplus_cap_factor > 0.0)
        surplus = std::min(surplus, sampling.surplus_cap_factor * steady);
    }
    const double gap = safe + surplus;
    sc.platoon.cavs.push_back({lead_x - gap, v, 0.0});
    lead_x -= gap;
    lead_v = v;
  }

  sc.check_admission();
  return sc;
}

}  // namespace platoon
