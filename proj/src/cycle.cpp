#include "anyon_carnot/cycle.hpp"

#include <cmath>
#include <string>

#include "anyon_carnot/errors.hpp"
#include "anyon_carnot/series.hpp"

namespace anyon {

void CycleConfig::validate() const {
  if (!(std::isfinite(t_h) && t_h > 0.0)) throw DomainError("t_h", "must be finite and > 0");
  if (!(std::isfinite(t_c) && t_c > 0.0)) throw DomainError("t_c", "must be finite and > 0");
  if (!(t_c < t_h)) throw DomainError("t_c", "must be below t_h");
  const std::pair<const char*, double> nus[] = {
      {"nu_a", nu_a}, {"nu_b", nu_b}, {"nu_c", nu_c}, {"nu_d", nu_d}};
  for (const auto& [name, v] : nus) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError(name, "must lie in [0, 1]");
  }
  scale.validate();
}

double classical_efficiency(double t_h, double t_c) {
  if (!(std::isfinite(t_h) && t_h > 0.0)) throw DomainError("t_h", "must be finite and > 0");
  if (!(std::isfinite(t_c) && t_c > 0.0)) throw DomainError("t_c", "must be finite and > 0");
  if (!(t_c < t_h)) throw DomainError("t_c", "must be below t_h");
  return 1.0 - t_c / t_h;
}

namespace {

ThermalPoint series_point(StatisticsParameter nu, InverseTemperature beta) {
  ThermalPoint p{nu, beta};
  p.z = partition_truncated(nu, beta).value;
  p.log_z = std::log(p.z);
  p.mean_energy = mean_energy_truncated(nu, beta).value;
  p.entropy = entropy_truncated(nu, beta).value;
  return p;
}

}  // namespace

CycleCorners evaluate_corners(const CycleConfig& config, Route route) {
  config.validate();
  const auto beta_h = InverseTemperature::from_temperature(config.t_h, config.scale);
  const auto beta_c = InverseTemperature::from_temperature(config.t_c, config.scale);
  const StatisticsParameter nu_a(config.nu_a), nu_b(config.nu_b), nu_c(config.nu_c),
      nu_d(config.nu_d);

  if (route == Route::closed_form) {
    return {thermal_point(nu_a, beta_h),
            thermal_point(nu_b, beta_h),
            thermal_point(nu_c, beta_c),
            thermal_point(nu_d, beta_c),
            cross_mean_energy_closed(nu_c, nu_b, beta_h),
            cross_mean_energy_closed(nu_a, nu_d, beta_c)};
  }
  return {series_point(nu_a, beta_h),
          series_point(nu_b, beta_h),
          series_point(nu_c, beta_c),
          series_point(nu_d, beta_c),
          cross_mean_energy_truncated(nu_c, nu_b, beta_h).value,
          cross_mean_energy_truncated(nu_a, nu_d, beta_c).value};
}

namespace {

double heat_out_from(const CycleConfig& cfg, const CycleCorners& k) {
  const double hw = cfg.scale.hbar_omega;
  return cfg.scale.k_b * cfg.t_c * (k.c.log_z - k.d.log_z) - hw * k.d.mean_energy +
         hw * k.e_c_prime;
}

double heat_in_from(const CycleConfig& cfg, const CycleCorners& k) {
  const double hw = cfg.scale.hbar_omega;
  return cfg.scale.k_b * cfg.t_h * (k.b.log_z - k.a.log_z) + hw * k.b.mean_energy -
         hw * k.e_a_prime;
}

}  // namespace

double heat_out(const CycleConfig& config, Route route) {
  return heat_out_from(config, evaluate_corners(config, route));
}

double heat_in(const CycleConfig& config, Route route) {
  return heat_in_from(config, evaluate_corners(config, route));
}

double heat_out_entropy_form(const CycleConfig& config, Route route) {
  const auto k = evaluate_corners(config, route);
  const double hw = config.scale.hbar_omega;
  return config.scale.k_b * config.t_c * (k.c.entropy - k.d.entropy) + hw * k.e_c_prime -
         hw * k.c.mean_energy;
}

double heat_in_entropy_form(const CycleConfig& config, Route route) {
  const auto k = evaluate_corners(config, route);
  const double hw = config.scale.hbar_omega;
  return config.scale.k_b * config.t_h * (k.b.entropy - k.a.entropy) + hw * k.a.mean_energy -
         hw * k.e_a_prime;
}

CycleReport run_cycle(const CycleConfig& config, Route route) {
  CycleReport r;
  r.config = config;
  r.corners = evaluate_corners(config, route);
  r.q_in = heat_in_from(config, r.corners);
  r.q_out = heat_out_from(config, r.corners);
  r.work = r.q_in - r.q_out;
  r.eta_cce = classical_efficiency(config.t_h, config.t_c);
  r.flags.q_in_positive = r.q_in > 0.0;
  r.flags.positive_work = r.work > 0.0;
  if (r.flags.q_in_positive) {
    r.eta_qce = 1.0 - r.q_out / r.q_in;
    r.flags.eta_below_carnot = *r.eta_qce <= r.eta_cce + kCarnotSlack;
  }
  return r;
}

}  // namespace anyon
