#include "anyon_carnot/verify.hpp"

#include <cmath>

#include "anyon_carnot/errors.hpp"
#include "anyon_carnot/series.hpp"

namespace anyon {

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::z: return "Z";
    case Quantity::e: return "E";
    case Quantity::e_cross: return "E_cross";
    case Quantity::s: return "S";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) noexcept {
  for (auto q : {Quantity::z, Quantity::e, Quantity::e_cross, Quantity::s}) {
    if (to_string(q) == name) return q;
  }
  return std::nullopt;
}

std::vector<VerifyRow> verify_grid(const VerifyOptions& options) {
  if (!(options.tolerance >= 0.0)) throw DomainError("tolerance", "must be >= 0");
  const TailTolerance tail{options.tail_tolerance};
  std::vector<VerifyRow> rows;

  auto push = [&](Quantity q, double nu, double nu_prime, double x, double closed,
                  const SeriesValue& series) {
    VerifyRow r{q, nu, nu_prime, x, closed, series.value};
    r.rel_err = std::abs(closed - series.value) / std::abs(closed);
    r.tail_bound = series.tail_bound;
    r.n_max = series.n_max;
    r.pass = r.rel_err <= options.tolerance;
    rows.push_back(r);
  };

  for (Quantity q : options.quantities) {
    for (double x : options.xs) {
      const auto beta = InverseTemperature::reduced(x);
      for (double nu_value : options.nus) {
        const StatisticsParameter nu(nu_value);
        switch (q) {
          case Quantity::z:
            push(q, nu_value, nu_value, x, partition_closed(nu, beta),
                 partition_truncated(nu, beta, tail));
            break;
          case Quantity::e:
            push(q, nu_value, nu_value, x, mean_energy_closed(nu, beta),
                 mean_energy_truncated(nu, beta, tail));
            break;
          case Quantity::s:
            push(q, nu_value, nu_value, x, entropy(nu, beta), entropy_truncated(nu, beta, tail));
            break;
          case Quantity::e_cross:
            for (double nu_prime_value : options.nus) {
              const StatisticsParameter nu_prime(nu_prime_value);
              push(q, nu_value, nu_prime_value, x, cross_mean_energy_closed(nu, nu_prime, beta),
                   cross_mean_energy_truncated(nu, nu_prime, beta, tail));
            }
            break;
        }
      }
    }
  }
  return rows;
}

}  // namespace anyon
