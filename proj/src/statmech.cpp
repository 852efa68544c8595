#include "anyon_carnot/statmech.hpp"

#include <cmath>
#include <numbers>

#include "anyon_carnot/errors.hpp"

namespace anyon {

InverseTemperature::InverseTemperature(double beta, double hbar_omega)
    : beta_(beta), hbar_omega_(hbar_omega) {
  if (!(std::isfinite(beta) && beta > 0.0)) {
    throw DomainError("beta", "inverse temperature must be finite and > 0");
  }
  if (!(std::isfinite(hbar_omega) && hbar_omega > 0.0)) {
    throw DomainError("hbar_omega", "must be finite and > 0");
  }
}

InverseTemperature InverseTemperature::from_temperature(double temperature,
                                                        const EnergyScale& scale) {
  scale.validate();
  if (!(std::isfinite(temperature) && temperature > 0.0)) {
    throw DomainError("temperature", "must be finite and > 0");
  }
  return InverseTemperature(1.0 / (scale.k_b * temperature), scale.hbar_omega);
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log_cosh(double y) {
  y = std::abs(y);
  if (y < 1.0) return std::log(std::cosh(y));
  return y + std::log1p(std::exp(-2.0 * y)) - kLn2;
}

// y > 0
double log_sinh(double y) {
  if (y < 1.0) return std::log(std::sinh(y));
  return y + std::log1p(-std::exp(-2.0 * y)) - kLn2;
}

}  // namespace

double log_partition_closed(StatisticsParameter nu, InverseTemperature beta) {
  const double x = beta.x();
  return log_cosh((1.0 - nu.value()) * x) - 3.0 * kLn2 - 2.0 * log_sinh(0.5 * x) -
         2.0 * log_sinh(x);
}

double partition_closed(StatisticsParameter nu, InverseTemperature beta) {
  const double x = beta.x();
  if (x <= 50.0) {
    const double s_half = std::sinh(0.5 * x);
    const double s = std::sinh(x);
    return std::cosh((1.0 - nu.value()) * x) / (8.0 * s_half * s_half * s * s);
  }
  return std::exp(log_partition_closed(nu, beta));
}

double occupation(const LevelIndex& level, StatisticsParameter nu, InverseTemperature beta) {
  return std::exp(-beta.x() * energy(level, nu) - log_partition_closed(nu, beta));
}

double cross_mean_energy_closed(StatisticsParameter nu, StatisticsParameter nu_prime,
                                InverseTemperature beta) {
  // Numerator and denominator both grow like exp(x * max(nu', 2 - nu')); every
  // exponential is taken relative to that scale so nothing overflows.
  const double x = beta.x();
  const double v = nu.value();
  const double vp = nu_prime.value();
  const double top = x + x * std::abs(1.0 - vp);
  const auto scaled_cosh = [&](double a) {
    return 0.5 * (std::exp(a - top) + std::exp(-a - top));
  };
  const double numerator = (v + 2.0) * scaled_cosh(x * (vp - 2.0)) -
                           (v - 4.0) * scaled_cosh(x * vp) +
                           2.0 * scaled_cosh(x * (1.0 - vp));
  // 2 sinh(x) cosh(x(1-nu')) e^{-top}
  const double denominator =
      -std::expm1(-2.0 * x) * 0.5 * (1.0 + std::exp(-2.0 * x * std::abs(1.0 - vp)));
  return numerator / denominator;
}

double mean_energy_closed(StatisticsParameter nu, InverseTemperature beta) {
  return cross_mean_energy_closed(nu, nu, beta);
}

// x <E> + ln Z with the terms linear in x cancelled by hand. What is left is
// a sum of non-negative pieces, one per hyperbolic factor of Z, so small
// entropies at large x keep full relative precision.
double entropy(StatisticsParameter nu, InverseTemperature beta) {
  const double x = beta.x();
  const double ax = std::abs(1.0 - nu.value()) * x;
  const double q = std::exp(-2.0 * ax);
  const double mixing = 2.0 * ax * q / (1.0 + q) + std::log1p(q);
  const double half = 2.0 * x / std::expm1(x) - 2.0 * std::log1p(-std::exp(-x));
  const double full = 4.0 * x / std::expm1(2.0 * x) - 2.0 * std::log1p(-std::exp(-2.0 * x));
  return mixing + half + full;
}

ThermalPoint thermal_point(StatisticsParameter nu, InverseTemperature beta) {
  ThermalPoint p{nu, beta};
  p.log_z = log_partition_closed(nu, beta);
  p.z = partition_closed(nu, beta);
  p.mean_energy = mean_energy_closed(nu, beta);
  p.entropy = entropy(nu, beta);
  return p;
}

}  // namespace anyon
