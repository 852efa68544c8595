#pragma once

// Two anyons in an isotropic 2D harmonic trap. Energies are in units of hbar*omega.
//
//   class I : E = 2 + nu + j + k + 2l + 2m
//   class II: E = 4 - nu + j + k + 2l + 2m
//
// j,k count centre-of-mass quanta, l,m relative-motion quanta. nu = 0 is the
// boson point, nu = 1 the fermion point; nu in [0,2] is accepted so that the
// class swap nu <-> 2 - nu stays in range.

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace anyon {

enum class LevelClass : std::uint8_t { I, II };

std::string_view to_string(LevelClass c) noexcept;

struct LevelIndex {
  LevelClass cls = LevelClass::I;
  unsigned j = 0;
  unsigned k = 0;
  unsigned l = 0;
  unsigned m = 0;

  /// Total excitation n = j + k + 2l + 2m above the class ground state.
  constexpr unsigned excitation() const noexcept { return j + k + 2 * l + 2 * m; }

  friend constexpr auto operator<=>(const LevelIndex&, const LevelIndex&) = default;
};

class StatisticsParameter {
 public:
  static constexpr double kMin = 0.0;
  static constexpr double kMax = 2.0;

  /// Throws DomainError("nu") outside [0, 2] or on NaN.
  explicit StatisticsParameter(double nu);

  constexpr double value() const noexcept { return nu_; }

  /// The class-swapped parameter 2 - nu.
  StatisticsParameter mirrored() const { return StatisticsParameter(2.0 - nu_); }

 private:
  double nu_;
};

/// Unit scales applied only when results leave the dimensionless core.
struct EnergyScale {
  double hbar_omega = 1.0;
  double k_b = 1.0;

  /// Throws DomainError("hbar_omega"/"k_b") unless both are finite and > 0.
  void validate() const;

  friend bool operator==(const EnergyScale&, const EnergyScale&) = default;
};

double ground_energy(LevelClass cls, StatisticsParameter nu) noexcept;

double energy(const LevelIndex& level, StatisticsParameter nu) noexcept;

/// Number of (j,k,l,m) >= 0 with j + k + 2l + 2m = n.
std::uint64_t degeneracy(unsigned n) noexcept;

/// Every level of both classes with energy <= e_max. Order: class, then
/// excitation n, then (j,k,l,m) lexicographically.
std::vector<LevelIndex> enumerate_levels(StatisticsParameter nu, double e_max);

/// Every level of both classes with excitation n <= n_max, same ordering.
std::vector<LevelIndex> enumerate_levels_to_excitation(unsigned n_max);

}  // namespace anyon
