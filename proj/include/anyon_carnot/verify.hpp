#pragma once

// Closed form vs truncated level sum, quantity by quantity, over a (nu, x) grid.

#include <optional>
#include <string_view>
#include <vector>

namespace anyon {

enum class Quantity { z, e, e_cross, s };

std::string_view to_string(Quantity q) noexcept;  // "Z", "E", "E_cross", "S"
std::optional<Quantity> parse_quantity(std::string_view name) noexcept;

struct VerifyOptions {
  std::vector<double> nus{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> xs{0.25, 0.5, 1.0, 2.0, 4.0};
  std::vector<Quantity> quantities{Quantity::z, Quantity::e, Quantity::e_cross, Quantity::s};
  double tolerance = 1e-9;
  double tail_tolerance = 1e-12;
};

struct VerifyRow {
  Quantity quantity = Quantity::z;
  double nu = 0.0;
  double nu_prime = 0.0;  // equals nu except for E_cross
  double x = 0.0;
  double closed = 0.0;
  double truncated = 0.0;
  double rel_err = 0.0;
  double tail_bound = 0.0;
  unsigned n_max = 0;
  bool pass = false;
};

/// Rows ordered by quantity, then x, then nu (then nu' for E_cross).
/// Throws DomainError on out-of-range nu or x.
std::vector<VerifyRow> verify_grid(const VerifyOptions& options);

}  // namespace anyon
