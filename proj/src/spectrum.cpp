#include "anyon_carnot/spectrum.hpp"

#include <cmath>

#include "anyon_carnot/errors.hpp"

namespace anyon {

std::string_view to_string(LevelClass c) noexcept {
  return c == LevelClass::I ? "I" : "II";
}

StatisticsParameter::StatisticsParameter(double nu) : nu_(nu) {
  if (!(nu >= kMin && nu <= kMax)) {
    throw DomainError("nu", "statistics parameter must lie in [0, 2]");
  }
}

void EnergyScale::validate() const {
  if (!(std::isfinite(hbar_omega) && hbar_omega > 0.0)) {
    throw DomainError("hbar_omega", "must be finite and > 0");
  }
  if (!(std::isfinite(k_b) && k_b > 0.0)) {
    throw DomainError("k_b", "must be finite and > 0");
  }
}

double ground_energy(LevelClass cls, StatisticsParameter nu) noexcept {
  return cls == LevelClass::I ? 2.0 + nu.value() : 4.0 - nu.value();
}

double energy(const LevelIndex& level, StatisticsParameter nu) noexcept {
  return ground_energy(level.cls, nu) + static_cast<double>(level.excitation());
}

std::uint64_t degeneracy(unsigned n) noexcept {
  std::uint64_t total = 0;
  for (std::uint64_t t = 0; 2 * t <= n; ++t) {
    total += (t + 1) * (n - 2 * t + 1);
  }
  return total;
}

namespace {

// Appends the levels of one class with excitation exactly n, lexicographic in (j,k,l,m).
void append_shell(LevelClass cls, unsigned n, std::vector<LevelIndex>& out) {
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned k = 0; j + k <= n; ++k) {
      const unsigned rest = n - j - k;
      if (rest % 2 != 0) continue;
      for (unsigned l = 0; l <= rest / 2; ++l) {
        out.push_back({cls, j, k, l, rest / 2 - l});
      }
    }
  }
}

}  // namespace

std::vector<LevelIndex> enumerate_levels(StatisticsParameter nu, double e_max) {
  if (std::isnan(e_max) || std::isinf(e_max)) {
    throw DomainError("e_max", "must be finite");
  }
  std::vector<LevelIndex> out;
  for (LevelClass cls : {LevelClass::I, LevelClass::II}) {
    const double e0 = ground_energy(cls, nu);
    for (unsigned n = 0; e0 + static_cast<double>(n) <= e_max; ++n) {
      append_shell(cls, n, out);
    }
  }
  return out;
}

std::vector<LevelIndex> enumerate_levels_to_excitation(unsigned n_max) {
  std::vector<LevelIndex> out;
  for (LevelClass cls : {LevelClass::I, LevelClass::II}) {
    for (unsigned n = 0; n <= n_max; ++n) append_shell(cls, n, out);
  }
  return out;
}

}  // namespace anyon
