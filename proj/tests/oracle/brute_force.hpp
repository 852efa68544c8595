#pragma once

// Test-only oracles. Everything here is written directly from the level
// formula E = ground + j + k + 2l + 2m with explicit loops over (j,k,l,m);
// nothing calls into the closed forms or the shell-summed series.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

struct Level {
  int cls;  // 0 = class I, 1 = class II
  unsigned j, k, l, m;
  unsigned n() const { return j + k + 2 * l + 2 * m; }
};

inline double ground(int cls, double nu) { return cls == 0 ? 2.0 + nu : 4.0 - nu; }

inline std::uint64_t quadruple_count(unsigned n) {
  std::uint64_t count = 0;
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned l = 0; l <= n; ++l)
        for (unsigned m = 0; m <= n; ++m)
          if (j + k + 2 * l + 2 * m == n) ++count;
  return count;
}

/// Every level of both classes with excitation <= n_max, by quadruple loop.
inline std::vector<Level> levels_to(unsigned n_max) {
  std::vector<Level> out;
  for (int cls = 0; cls < 2; ++cls)
    for (unsigned j = 0; j <= n_max; ++j)
      for (unsigned k = 0; j + k <= n_max; ++k)
        for (unsigned l = 0; j + k + 2 * l <= n_max; ++l)
          for (unsigned m = 0; j + k + 2 * l + 2 * m <= n_max; ++m)
            out.push_back({cls, j, k, l, m});
  return out;
}

/// Level-by-level Gibbs sums in long double.
struct GibbsSums {
  long double z = 0;
  long double mean_energy = 0;  // <E_nu> under weights of nu'
  long double shannon = 0;      // -sum p ln p (only meaningful for nu == nu')
};

inline GibbsSums gibbs(double nu, double nu_prime, double x, unsigned n_max) {
  const auto levels = levels_to(n_max);
  GibbsSums s;
  long double num = 0;
  for (const auto& lv : levels) {
    const long double w = std::exp(-static_cast<long double>(x) * (ground(lv.cls, nu_prime) + lv.n()));
    s.z += w;
    num += w * (ground(lv.cls, nu) + lv.n());
  }
  s.mean_energy = num / s.z;
  for (const auto& lv : levels) {
    const long double log_p =
        -static_cast<long double>(x) * (ground(lv.cls, nu_prime) + lv.n()) - std::log(s.z);
    s.shannon -= std::exp(log_p) * log_p;
  }
  return s;
}

/// Central difference of f at t with step h.
template <class F>
double central_difference(F f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace oracle
