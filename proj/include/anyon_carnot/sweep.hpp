#pragma once

// Rectangular grids over the six cycle parameters. Rows are produced in
// row-major order over (t_h, t_c, nu_a, nu_b, nu_c, nu_d), t_h slowest.
// Grid points that violate the cycle invariants are skipped and counted.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "anyon_carnot/cycle.hpp"

namespace anyon {

enum class SweepParameter : std::uint8_t { t_h, t_c, nu_a, nu_b, nu_c, nu_d };

inline constexpr std::array<SweepParameter, 6> kSweepParameters = {
    SweepParameter::t_h,  SweepParameter::t_c,  SweepParameter::nu_a,
    SweepParameter::nu_b, SweepParameter::nu_c, SweepParameter::nu_d};

std::string_view to_string(SweepParameter p) noexcept;
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) noexcept;

/// `count` evenly spaced values from start to stop inclusive.
struct Axis {
  double start = 0.0;
  double stop = 0.0;
  unsigned count = 1;

  static Axis fixed(double v) { return {v, v, 1}; }

  bool ranged() const { return count > 1; }
  double at(unsigned i) const;

  friend bool operator==(const Axis&, const Axis&) = default;
};

enum class Objective { none, max_work, max_efficiency };

std::string_view to_string(Objective o) noexcept;
std::optional<Objective> parse_objective(std::string_view name) noexcept;

inline constexpr std::uint64_t kDefaultGridCap = 1'000'000;

struct SweepSpec {
  std::array<Axis, 6> axes{};
  EnergyScale scale{};
  Objective objective = Objective::none;
  std::uint64_t cap = kDefaultGridCap;
  unsigned threads = 1;  // 0 = hardware concurrency
  Route route = Route::closed_form;

  Axis& axis(SweepParameter p) { return axes[static_cast<std::size_t>(p)]; }
  const Axis& axis(SweepParameter p) const { return axes[static_cast<std::size_t>(p)]; }

  /// DomainError for malformed axes, GridCapExceeded when the grid is over `cap`.
  void validate() const;

  std::uint64_t grid_size() const;
  CycleConfig config_at(std::uint64_t index) const;
};

struct SweepSummary {
  std::uint64_t grid_size = 0;
  std::uint64_t rows = 0;
  std::uint64_t skipped = 0;
  std::optional<CycleReport> best;
};

struct SweepResult {
  std::vector<CycleReport> rows;
  std::uint64_t grid_size = 0;
  std::uint64_t skipped = 0;
  std::optional<CycleReport> best;
};

/// True when `candidate` may be ranked under `objective` (max_efficiency only
/// ranks positive-work rows with a defined efficiency).
bool eligible(Objective objective, const CycleReport& candidate);

/// Strictly better; ties keep the incumbent.
bool better(Objective objective, const CycleReport& candidate, const CycleReport& incumbent);

/// Streams every valid row to `on_row` in grid order. Output is independent
/// of `spec.threads`.
SweepSummary run_sweep(const SweepSpec& spec,
                       const std::function<void(const CycleReport&)>& on_row);

SweepResult run_sweep(const SweepSpec& spec);

struct RefineResult {
  SweepParameter parameter = SweepParameter::t_h;
  CycleReport best;
  double lo = 0.0;  // final scan window
  double hi = 0.0;
  unsigned iterations = 0;

  double width() const { return hi - lo; }
};

/// Grid refinement on a single ranged parameter: scan, shrink the window by 4
/// around the best point (shifted to stay inside the original range), repeat
/// `iterations` times. The returned best is the best seen over all scans.
RefineResult refine_optimum(const SweepSpec& spec, unsigned iterations);

}  // namespace anyon
