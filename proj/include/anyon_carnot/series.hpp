#pragma once

// Truncated level sums: the brute-force counterpart of the closed forms in
// statmech.hpp. Sums run shell by shell over the total excitation
// n = j + k + 2l + 2m of both classes, weighting each shell by degeneracy(n).
//
// Every result carries a certified relative tail bound. The bound uses
// degeneracy(n) <= C(n+3, 3) (the map (j,k,l,m) -> (j,k,2l,2m) injects into
// the 4-part compositions of n). For the dropped terms
// a_n = w * p(n) * C(n+3,3) * e^{-xn}, n > N, with p(n) = 1 or c + n, the term
// ratio a_{n+1}/a_n decreases in n. Terms are added explicitly from N+1 up
// to the first n0 whose ratio rho is below 1, then sum_{n>=n0} a_n <= a_{n0} / (1 - rho).

#include "anyon_carnot/statmech.hpp"

namespace anyon {

/// Fixed truncation: keep shells n <= value.
struct NMax {
  unsigned value = 0;
};

/// Adaptive truncation: grow n until the certified relative tail bound <= value.
struct TailTolerance {
  double value = 1e-12;
};

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;  // relative to value
  unsigned n_max = 0;
};

/// Adaptive sums give up past this excitation and throw DomainError("beta").
inline constexpr unsigned kMaxSeriesExcitation = 2'000'000;

SeriesValue partition_truncated(StatisticsParameter nu, InverseTemperature beta, NMax n_max);
SeriesValue partition_truncated(StatisticsParameter nu, InverseTemperature beta,
                                TailTolerance tol = {});

/// sum E_nu(level) e^{-x E_nu'(level)} / sum e^{-x E_nu'(level)} over the kept shells.
SeriesValue cross_mean_energy_truncated(StatisticsParameter nu, StatisticsParameter nu_prime,
                                        InverseTemperature beta, NMax n_max);
SeriesValue cross_mean_energy_truncated(StatisticsParameter nu, StatisticsParameter nu_prime,
                                        InverseTemperature beta, TailTolerance tol = {});

SeriesValue mean_energy_truncated(StatisticsParameter nu, InverseTemperature beta, NMax n_max);
SeriesValue mean_energy_truncated(StatisticsParameter nu, InverseTemperature beta,
                                  TailTolerance tol = {});

/// Shannon form -sum p ln p of the Gibbs distribution renormalised on the kept shells.
SeriesValue entropy_truncated(StatisticsParameter nu, InverseTemperature beta, NMax n_max);
SeriesValue entropy_truncated(StatisticsParameter nu, InverseTemperature beta,
                              TailTolerance tol = {});

/// Certified absolute bound on sum_{n > n_max} C(n+3,3) (c + n)^power e^{-x n},
/// power in {0, 1}. Exposed for testing.
double shell_tail_bound(double x, unsigned n_max, double c, int power);

}  // namespace anyon
