#pragma once

// Text formats. Numbers are written with 17 significant digits so doubles
// round-trip exactly; CSV and JSON renderings of one run carry the same text.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anyon_carnot/cycle.hpp"
#include "anyon_carnot/spectrum.hpp"
#include "anyon_carnot/sweep.hpp"
#include "anyon_carnot/verify.hpp"

namespace anyon {

/// %.17g; non-finite values become "nan"/"inf"/"-inf".
std::string format_number(double v);

inline constexpr std::string_view kCycleCsvHeader =
    "t_h,t_c,nu_a,nu_b,nu_c,nu_d,q_in,q_out,work,eta_qce,eta_cce,valid";

std::string cycle_csv_row(const CycleReport& r);
std::string cycle_json(const CycleReport& r);

/// Cycle config file contents: flat JSON, every key optional until merged with flags.
struct PartialConfig {
  std::optional<double> t_h, t_c, nu_a, nu_b, nu_c, nu_d, hbar_omega, k_b;
};

/// Throws DomainError on malformed JSON, nesting, unknown keys or non-numbers.
PartialConfig parse_config_json(std::string_view text);

/// Fills scale defaults; throws DomainError(field, "missing") for absent cycle keys.
CycleConfig complete_config(const PartialConfig& partial);

std::string config_json(const CycleConfig& config);

/// Sweep spec file: each cycle key is a number (fixed) or {"start","stop","count"};
/// optional hbar_omega, k_b, objective, cap.
struct PartialSweep {
  std::array<std::optional<Axis>, 6> axes;
  std::optional<double> hbar_omega, k_b;
  std::optional<Objective> objective;
  std::optional<std::uint64_t> cap;
};

PartialSweep parse_sweep_json(std::string_view text);

/// Throws DomainError(field, "missing") for absent axes.
SweepSpec complete_sweep(const PartialSweep& partial);

std::string sweep_metadata_json(const SweepSummary& summary, Objective objective);

inline constexpr std::string_view kSpectrumCsvHeader = "class,j,k,l,m,energy";

std::string spectrum_csv(const std::vector<LevelIndex>& levels, StatisticsParameter nu,
                         double hbar_omega = 1.0);
std::string spectrum_json(const std::vector<LevelIndex>& levels, StatisticsParameter nu,
                          double hbar_omega = 1.0);

inline constexpr std::string_view kVerifyCsvHeader =
    "quantity,nu,nu_prime,x,closed,truncated,rel_err,tail_bound,n_max,pass";

std::string verify_csv(const std::vector<VerifyRow>& rows);
std::string verify_json(const std::vector<VerifyRow>& rows, double tolerance);

}  // namespace anyon
