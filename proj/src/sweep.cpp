#include "anyon_carnot/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "anyon_carnot/errors.hpp"

namespace anyon {

std::string_view to_string(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::t_h: return "t_h";
    case SweepParameter::t_c: return "t_c";
    case SweepParameter::nu_a: return "nu_a";
    case SweepParameter::nu_b: return "nu_b";
    case SweepParameter::nu_c: return "nu_c";
    case SweepParameter::nu_d: return "nu_d";
  }
  return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) noexcept {
  for (auto p : kSweepParameters) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view to_string(Objective o) noexcept {
  switch (o) {
    case Objective::none: return "none";
    case Objective::max_work: return "max_work";
    case Objective::max_efficiency: return "max_efficiency";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  for (auto o : {Objective::none, Objective::max_work, Objective::max_efficiency}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

double Axis::at(unsigned i) const {
  if (count <= 1) return start;
  if (i + 1 == count) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

namespace {

bool is_nu(SweepParameter p) {
  return p != SweepParameter::t_h && p != SweepParameter::t_c;
}

}  // namespace

void SweepSpec::validate() const {
  std::uint64_t size = 1;
  for (auto p : kSweepParameters) {
    const Axis& a = axis(p);
    const std::string name(to_string(p));
    if (a.count == 0) throw DomainError(name, "empty grid (count must be >= 1)");
    if (!std::isfinite(a.start) || !std::isfinite(a.stop)) {
      throw DomainError(name, "range bounds must be finite");
    }
    if (a.start > a.stop) throw DomainError(name, "start must not exceed stop");
    if (a.ranged() && is_nu(p) && (a.start < 0.0 || a.stop > 1.0)) {
      throw DomainError(name, "ranged statistics parameter must stay within [0, 1]");
    }
    if (size > cap / a.count) {
      throw GridCapExceeded("grid size exceeds cap of " + std::to_string(cap));
    }
    size *= a.count;
  }
  scale.validate();
}

std::uint64_t SweepSpec::grid_size() const {
  std::uint64_t size = 1;
  for (const Axis& a : axes) size *= a.count;
  return size;
}

CycleConfig SweepSpec::config_at(std::uint64_t index) const {
  std::array<double, 6> v{};
  for (std::size_t i = axes.size(); i-- > 0;) {
    const unsigned c = axes[i].count;
    v[i] = axes[i].at(static_cast<unsigned>(index % c));
    index /= c;
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5], scale};
}

bool eligible(Objective objective, const CycleReport& r) {
  switch (objective) {
    case Objective::none: return false;
    case Objective::max_work: return true;
    case Objective::max_efficiency: return r.flags.positive_work && r.eta_qce.has_value();
  }
  return false;
}

bool better(Objective objective, const CycleReport& candidate, const CycleReport& incumbent) {
  switch (objective) {
    case Objective::none: return false;
    case Objective::max_work: return candidate.work > incumbent.work;
    case Objective::max_efficiency: return *candidate.eta_qce > *incumbent.eta_qce;
  }
  return false;
}

namespace {

constexpr std::uint64_t kBlock = 4096;

std::optional<CycleReport> evaluate_point(const SweepSpec& spec, std::uint64_t index) {
  const CycleConfig cfg = spec.config_at(index);
  try {
    cfg.validate();
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return run_cycle(cfg, spec.route);
}

// Fills out[i] for grid indices [first, first + out.size()). Each slot is
// written by exactly one worker.
void evaluate_block(const SweepSpec& spec, std::uint64_t first,
                    std::vector<std::optional<CycleReport>>& out, unsigned threads) {
  if (threads <= 1 || out.size() < 2) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = evaluate_point(spec, first + i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      out[i] = evaluate_point(spec, first + i);
    }
  };
  std::vector<std::jthread> pool;
  const auto n = std::min<std::size_t>(threads, out.size());
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
}

}  // namespace

SweepSummary run_sweep(const SweepSpec& spec,
                       const std::function<void(const CycleReport&)>& on_row) {
  spec.validate();
  unsigned threads = spec.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  SweepSummary summary;
  summary.grid_size = spec.grid_size();
  std::vector<std::optional<CycleReport>> block;
  for (std::uint64_t first = 0; first < summary.grid_size; first += kBlock) {
    block.assign(std::min(kBlock, summary.grid_size - first), std::nullopt);
    evaluate_block(spec, first, block, threads);
    for (auto& row : block) {
      if (!row) {
        ++summary.skipped;
        continue;
      }
      ++summary.rows;
      if (eligible(spec.objective, *row) &&
          (!summary.best || better(spec.objective, *row, *summary.best))) {
        summary.best = *row;
      }
      if (on_row) on_row(*row);
    }
  }
  return summary;
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  const auto summary = run_sweep(spec, [&](const CycleReport& r) { result.rows.push_back(r); });
  result.grid_size = summary.grid_size;
  result.skipped = summary.skipped;
  result.best = summary.best;
  return result;
}

RefineResult refine_optimum(const SweepSpec& spec, unsigned iterations) {
  if (spec.objective == Objective::none) {
    throw DomainError("objective", "refinement needs max_work or max_efficiency");
  }
  std::optional<SweepParameter> ranged;
  for (auto p : kSweepParameters) {
    if (!spec.axis(p).ranged()) continue;
    if (ranged) throw DomainError("sweep", "refinement needs exactly one ranged parameter");
    ranged = p;
  }
  if (!ranged) throw DomainError("sweep", "refinement needs exactly one ranged parameter");
  spec.validate();

  const Axis initial = spec.axis(*ranged);
  RefineResult result;
  result.parameter = *ranged;
  result.iterations = iterations;
  std::optional<CycleReport> best;

  SweepSpec scan = spec;
  double lo = initial.start;
  double hi = initial.stop;
  for (unsigned it = 0;; ++it) {
    scan.axis(*ranged) = Axis{lo, hi, initial.count};
    const auto summary = run_sweep(scan, nullptr);
    if (summary.best && (!best || better(spec.objective, *summary.best, *best))) {
      best = summary.best;
    }
    result.lo = lo;
    result.hi = hi;
    if (it == iterations) break;

    const double width = (hi - lo) / 4.0;
    double centre = 0.5 * (lo + hi);
    if (best) {
      const CycleConfig& c = best->config;
      const double values[] = {c.t_h, c.t_c, c.nu_a, c.nu_b, c.nu_c, c.nu_d};
      centre = values[static_cast<std::size_t>(*ranged)];
    }
    lo = centre - 0.5 * width;
    hi = centre + 0.5 * width;
    if (lo < initial.start) {
      lo = initial.start;
      hi = initial.start + width;
    } else if (hi > initial.stop) {
      hi = initial.stop;
      lo = initial.stop - width;
    }
  }
  if (!best) throw DomainError("objective", "no grid point is eligible for the objective");
  result.best = *best;
  return result;
}

}  // namespace anyon
