#include "anyon_carnot/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "anyon_carnot/errors.hpp"

namespace anyon {

double shell_tail_bound(double x, unsigned n_max, double c, int power) {
  const auto term = [&](double n) {
    const double t = (n + 1.0) * (n + 2.0) * (n + 3.0) / 6.0 * std::exp(-x * n);
    return power == 1 ? t * (c + n) : t;
  };
  const auto ratio = [&](double n) {
    const double r = std::exp(-x) * (n + 4.0) / (n + 1.0);
    return power == 1 ? r * (c + n + 1.0) / (c + n) : r;
  };
  // Terms still growing near n_max are summed one by one until the ratio drops below 1.
  double n = static_cast<double>(n_max) + 1.0;
  double head = 0.0;
  while (!(ratio(n) < 1.0)) {
    if (n > static_cast<double>(kMaxSeriesExcitation)) return std::numeric_limits<double>::infinity();
    head += term(n);
    n += 1.0;
  }
  return head + term(n) / (1.0 - ratio(n));
}

namespace {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct ClassTerms {
  double energy_ground;  // ground energy in the nu (energy) spectrum
  double weight_ground;  // ground energy in the nu' (weight) spectrum, minus the lower of the two
};

// Shell-by-shell sums of e^{-x E'} and E e^{-x E'}, both scaled by e^{x E'_min}
// where E'_min is the lower class ground of the weight spectrum.
class ShellAccumulator {
 public:
  ShellAccumulator(StatisticsParameter nu, StatisticsParameter nu_prime, InverseTemperature beta)
      : x_(beta.x()) {
    const double w1 = ground_energy(LevelClass::I, nu_prime);
    const double w2 = ground_energy(LevelClass::II, nu_prime);
    shift_ = std::min(w1, w2);
    classes_ = {ClassTerms{ground_energy(LevelClass::I, nu), w1 - shift_},
                ClassTerms{ground_energy(LevelClass::II, nu), w2 - shift_}};
  }

  void add_shell() {
    const double g = static_cast<double>(degeneracy(next_));
    const double n = static_cast<double>(next_);
    for (const auto& c : classes_) {
      const double w = g * std::exp(-x_ * (c.weight_ground + n));
      z_.add(w);
      e_.add(w * (c.energy_ground + n));
    }
    ++next_;
  }

  unsigned shells() const { return next_; }
  unsigned n_max() const { return next_ - 1; }
  double x() const { return x_; }
  double shift() const { return shift_; }
  const std::array<ClassTerms, 2>& classes() const { return classes_; }

  double z_scaled() const { return z_.value(); }
  double mean_energy() const { return e_.value() / z_.value(); }

  double z_tail_scaled() const {
    double t = 0.0;
    for (const auto& c : classes_) {
      t += std::exp(-x_ * c.weight_ground) * shell_tail_bound(x_, n_max(), 0.0, 0);
    }
    return t;
  }

  double e_numerator_tail_scaled() const {
    double t = 0.0;
    for (const auto& c : classes_) {
      t += std::exp(-x_ * c.weight_ground) * shell_tail_bound(x_, n_max(), c.energy_ground, 1);
    }
    return t;
  }

  double z_tail_relative() const { return z_tail_scaled() / z_scaled(); }

  // |E_inf - E_N| <= (T_num + E_N T_den) / den_N
  double mean_energy_tail_absolute() const {
    return (e_numerator_tail_scaled() + mean_energy() * z_tail_scaled()) / z_scaled();
  }

  double mean_energy_tail_relative() const {
    return mean_energy_tail_absolute() / mean_energy();
  }

  // |S_inf - S_N| <= x |E_inf - E_N| + ln(1 + T_den / den_N)
  double entropy_tail_absolute() const {
    return x_ * mean_energy_tail_absolute() + z_tail_relative();
  }

 private:
  double x_;
  double shift_ = 0.0;
  std::array<ClassTerms, 2> classes_{};
  unsigned next_ = 0;
  CompensatedSum z_;
  CompensatedSum e_;
};

template <class Done>
ShellAccumulator accumulate_until(StatisticsParameter nu, StatisticsParameter nu_prime,
                                  InverseTemperature beta, Done done) {
  ShellAccumulator acc(nu, nu_prime, beta);
  do {
    if (acc.shells() > kMaxSeriesExcitation) {
      throw DomainError("beta", "series did not reach the requested tail tolerance");
    }
    acc.add_shell();
  } while (!done(acc));
  return acc;
}

ShellAccumulator accumulate_fixed(StatisticsParameter nu, StatisticsParameter nu_prime,
                                  InverseTemperature beta, NMax n_max) {
  ShellAccumulator acc(nu, nu_prime, beta);
  for (unsigned n = 0; n <= n_max.value; ++n) acc.add_shell();
  return acc;
}

void check_tolerance(TailTolerance tol) {
  if (!(tol.value > 0.0)) throw DomainError("tail_tol", "must be > 0");
}

SeriesValue partition_value(const ShellAccumulator& acc) {
  return {acc.z_scaled() * std::exp(-acc.x() * acc.shift()), acc.z_tail_relative(), acc.n_max()};
}

SeriesValue mean_energy_value(const ShellAccumulator& acc) {
  return {acc.mean_energy(), acc.mean_energy_tail_relative(), acc.n_max()};
}

// Second pass over the kept shells: -sum p ln p with p = e^{-x E} / Z_N.
SeriesValue entropy_value(const ShellAccumulator& acc) {
  const double x = acc.x();
  const double log_z_scaled = std::log(acc.z_scaled());
  CompensatedSum s;
  for (unsigned n = 0; n <= acc.n_max(); ++n) {
    const double g = static_cast<double>(degeneracy(n));
    for (const auto& c : acc.classes()) {
      const double log_p = -x * (c.weight_ground + n) - log_z_scaled;
      s.add(-g * std::exp(log_p) * log_p);
    }
  }
  const double value = s.value();
  const double abs_tail = acc.entropy_tail_absolute();
  return {value, value > 0.0 ? abs_tail / value : abs_tail, acc.n_max()};
}

}  // namespace

SeriesValue partition_truncated(StatisticsParameter nu, InverseTemperature beta, NMax n_max) {
  return partition_value(accumulate_fixed(nu, nu, beta, n_max));
}

SeriesValue partition_truncated(StatisticsParameter nu, InverseTemperature beta,
                                TailTolerance tol) {
  check_tolerance(tol);
  return partition_value(accumulate_until(
      nu, nu, beta, [&](const ShellAccumulator& a) { return a.z_tail_relative() <= tol.value; }));
}

SeriesValue cross_mean_energy_truncated(StatisticsParameter nu, StatisticsParameter nu_prime,
                                        InverseTemperature beta, NMax n_max) {
  return mean_energy_value(accumulate_fixed(nu, nu_prime, beta, n_max));
}

SeriesValue cross_mean_energy_truncated(StatisticsParameter nu, StatisticsParameter nu_prime,
                                        InverseTemperature beta, TailTolerance tol) {
  check_tolerance(tol);
  return mean_energy_value(accumulate_until(nu, nu_prime, beta, [&](const ShellAccumulator& a) {
    return a.mean_energy_tail_relative() <= tol.value;
  }));
}

SeriesValue mean_energy_truncated(StatisticsParameter nu, InverseTemperature beta, NMax n_max) {
  return cross_mean_energy_truncated(nu, nu, beta, n_max);
}

SeriesValue mean_energy_truncated(StatisticsParameter nu, InverseTemperature beta,
                                  TailTolerance tol) {
  return cross_mean_energy_truncated(nu, nu, beta, tol);
}

SeriesValue entropy_truncated(StatisticsParameter nu, InverseTemperature beta, NMax n_max) {
  return entropy_value(accumulate_fixed(nu, nu, beta, n_max));
}

SeriesValue entropy_truncated(StatisticsParameter nu, InverseTemperature beta,
                              TailTolerance tol) {
  check_tolerance(tol);
  return entropy_value(accumulate_until(nu, nu, beta, [&](const ShellAccumulator& a) {
    const double s = a.x() * (a.mean_energy() - a.shift()) + std::log(a.z_scaled());
    const double bound = a.entropy_tail_absolute();
    return s > 0.0 ? bound / s <= tol.value : bound <= tol.value;
  }));
}

}  // namespace anyon
