#pragma once

// Gibbs-state thermodynamics of the two-anyon spectrum in closed form.
//
// With x = beta * hbar_omega every level sum factorises into geometric series
// over (j,k,l,m), giving
//
//   Z(nu, x)        = cosh((1 - nu) x) / (8 sinh^2(x/2) sinh^2(x))
//   E(nu, nu', x)   = [ (nu+2) cosh(x(nu'-2)) - (nu-4) cosh(x nu') + 2 cosh(x(1-nu')) ]
//                     / (2 sinh(x) cosh(x(1-nu')))
//
// E(nu, nu', x) is the mean nu-spectrum energy under populations frozen from the
// thermal state of the nu' spectrum, i.e. the energy reached by a population-
// preserving change of nu. Energies are in units of hbar*omega and entropies
// in units of k_B throughout.

#include "anyon_carnot/spectrum.hpp"

namespace anyon {

class InverseTemperature {
 public:
  /// Throws DomainError("beta") unless beta is finite and > 0.
  explicit InverseTemperature(double beta, double hbar_omega = 1.0);

  /// beta = 1 / (k_B T).
  static InverseTemperature from_temperature(double temperature, const EnergyScale& scale);

  /// Natural units: beta = x, hbar_omega = 1.
  static InverseTemperature reduced(double x) { return InverseTemperature(x, 1.0); }

  double beta() const noexcept { return beta_; }
  double hbar_omega() const noexcept { return hbar_omega_; }
  double x() const noexcept { return beta_ * hbar_omega_; }

 private:
  double beta_;
  double hbar_omega_;
};

/// An equilibrium corner of the cycle.
struct ThermalPoint {
  StatisticsParameter nu{0.0};
  InverseTemperature beta{1.0};
  double z = 0.0;
  double log_z = 0.0;
  double mean_energy = 0.0;  // hbar*omega
  double entropy = 0.0;      // k_B
};

/// ln Z, evaluated overflow-free for any x > 0.
double log_partition_closed(StatisticsParameter nu, InverseTemperature beta);

double partition_closed(StatisticsParameter nu, InverseTemperature beta);

/// Gibbs population exp(-x E) / Z of one level.
double occupation(const LevelIndex& level, StatisticsParameter nu, InverseTemperature beta);

double cross_mean_energy_closed(StatisticsParameter nu, StatisticsParameter nu_prime,
                                InverseTemperature beta);

double mean_energy_closed(StatisticsParameter nu, InverseTemperature beta);

/// S / k_B = x <E> + ln Z.
double entropy(StatisticsParameter nu, InverseTemperature beta);

ThermalPoint thermal_point(StatisticsParameter nu, InverseTemperature beta);

}  // namespace anyon
