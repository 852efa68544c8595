#pragma once

// Modified quantum Carnot cycle with nu as the only control parameter:
//
//   A --(isotherm T_h, nu_A -> nu_B)--> B --(adiabat, nu_B -> nu_C)--> C'
//   C' --(relax at T_c, fixed nu_C)--> C --(isotherm T_c, nu_C -> nu_D)--> D
//   D --(adiabat, nu_D -> nu_A)--> A' --(relax at T_h, fixed nu_A)--> A
//
// Adiabats preserve level populations, so the primed corners carry the
// frozen-population energies <E_C'> = E(nu_C, nu_B, beta_h) and
// <E_A'> = E(nu_A, nu_D, beta_c).

#include <array>
#include <optional>

#include "anyon_carnot/statmech.hpp"

namespace anyon {

struct CycleConfig {
  double t_h = 0.0;
  double t_c = 0.0;
  double nu_a = 0.0;
  double nu_b = 0.0;
  double nu_c = 0.0;
  double nu_d = 0.0;
  EnergyScale scale{};

  /// Throws DomainError naming the first offending field: temperatures finite
  /// with t_h > t_c > 0, every nu in [0, 1], positive scales.
  void validate() const;

  friend bool operator==(const CycleConfig&, const CycleConfig&) = default;
};

/// Which evaluation path feeds the cycle: the closed forms, or the truncated
/// level sums (adaptive, tail tolerance 1e-12) used for verification.
enum class Route { closed_form, series };

/// Corner quantities of one cycle, in dimensionless units (hbar*omega, k_B).
struct CycleCorners {
  ThermalPoint a;
  ThermalPoint b;
  ThermalPoint c;
  ThermalPoint d;
  double e_c_prime = 0.0;
  double e_a_prime = 0.0;
};

CycleCorners evaluate_corners(const CycleConfig& config, Route route = Route::closed_form);

/// 1 - T_c / T_h. Throws DomainError unless t_h > t_c > 0.
double classical_efficiency(double t_h, double t_c);

/// Q_out = k_B T_c ln(Z_C / Z_D) - <E_D> + <E_C'>.
double heat_out(const CycleConfig& config, Route route = Route::closed_form);

/// Q_in = k_B T_h ln(Z_B / Z_A) + <E_B> - <E_A'>.
double heat_in(const CycleConfig& config, Route route = Route::closed_form);

/// Q_out = T_c (S_C - S_D) + <E_C'> - <E_C>.
double heat_out_entropy_form(const CycleConfig& config, Route route = Route::closed_form);

/// Q_in = T_h (S_B - S_A) + <E_A> - <E_A'>.
double heat_in_entropy_form(const CycleConfig& config, Route route = Route::closed_form);

struct CycleFlags {
  bool positive_work = false;
  bool q_in_positive = false;
  bool eta_below_carnot = false;
};

inline constexpr double kCarnotSlack = 1e-12;

struct CycleReport {
  CycleConfig config;
  double q_in = 0.0;
  double q_out = 0.0;
  double work = 0.0;
  std::optional<double> eta_qce;  // only when q_in > 0
  double eta_cce = 0.0;
  CycleCorners corners;
  CycleFlags flags;

  /// Operating as an engine: heat drawn from the hot side and positive work.
  bool valid() const { return flags.q_in_positive && flags.positive_work; }
};

CycleReport run_cycle(const CycleConfig& config, Route route = Route::closed_form);

}  // namespace anyon
