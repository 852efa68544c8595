#include "anyon_carnot/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "anyon_carnot/errors.hpp"
#include "anyon_carnot/report_io.hpp"

namespace anyon {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buf.str();
}

// Output target: the caller's stream, or a file opened on first use.
class Sink {
 public:
  Sink(std::ostream& fallback, std::string path) : fallback_(fallback), path_(std::move(path)) {}

  std::ostream& stream() {
    if (path_.empty()) return fallback_;
    if (!file_.is_open()) {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open output " + path_);
    }
    return file_;
  }

  void finish() {
    std::ostream& s = stream();
    s.flush();
    if (!s) throw IoError("write failed" + (path_.empty() ? std::string() : " for " + path_));
  }

 private:
  std::ostream& fallback_;
  std::string path_;
  std::ofstream file_;
};

struct CommonOptions {
  std::string format = "json";
  std::string output;
  std::string route = "closed";
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_route) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", o.output, "Write to this file instead of standard output");
  if (with_route) {
    cmd->add_option("--route", o.route, "closed (closed forms) or series (truncated sums)")
        ->check(CLI::IsMember({"closed", "series"}))
        ->capture_default_str();
  }
}

Route parse_route(const std::string& s) {
  return s == "series" ? Route::series : Route::closed_form;
}

// Cycle parameters settable by flag; these override config-file values.
struct ConfigFlags {
  std::string config_path;
  std::optional<double> t_h, t_c, nu_a, nu_b, nu_c, nu_d, hbar_omega, k_b;

  void add_to(CLI::App* cmd, bool with_config_path) {
    if (with_config_path) {
      cmd->add_option("--config", config_path, "Flat JSON config file");
    }
    cmd->add_option("--t-h", t_h, "Hot reservoir temperature");
    cmd->add_option("--t-c", t_c, "Cold reservoir temperature");
    cmd->add_option("--nu-a", nu_a, "Statistics parameter at A");
    cmd->add_option("--nu-b", nu_b, "Statistics parameter at B");
    cmd->add_option("--nu-c", nu_c, "Statistics parameter at C (and C')");
    cmd->add_option("--nu-d", nu_d, "Statistics parameter at D");
    cmd->add_option("--hbar-omega", hbar_omega, "Trap energy quantum (default 1)");
    cmd->add_option("--k-b", k_b, "Boltzmann constant (default 1)");
  }

  std::array<std::optional<double>, 6> cycle_values() const {
    return {t_h, t_c, nu_a, nu_b, nu_c, nu_d};
  }
};

int cmd_cycle(const ConfigFlags& flags, const CommonOptions& common, Sink& sink) {
  PartialConfig p;
  if (!flags.config_path.empty()) p = parse_config_json(read_file(flags.config_path));
  std::optional<double>* fields[] = {&p.t_h,  &p.t_c,  &p.nu_a,       &p.nu_b,
                                     &p.nu_c, &p.nu_d, &p.hbar_omega, &p.k_b};
  const std::optional<double> overrides[] = {flags.t_h,  flags.t_c,  flags.nu_a,
                                             flags.nu_b, flags.nu_c, flags.nu_d,
                                             flags.hbar_omega, flags.k_b};
  for (std::size_t i = 0; i < std::size(overrides); ++i) {
    if (overrides[i]) *fields[i] = overrides[i];
  }
  const CycleConfig config = complete_config(p);
  config.validate();
  const CycleReport report = run_cycle(config, parse_route(common.route));

  std::ostream& os = sink.stream();
  if (common.format == "csv") {
    os << kCycleCsvHeader << '\n' << cycle_csv_row(report) << '\n';
  } else {
    os << cycle_json(report) << '\n';
  }
  sink.finish();
  return kExitOk;
}

struct SweepFlags {
  ConfigFlags fixed;
  std::string param;
  std::optional<double> start, stop;
  std::optional<unsigned> count;
  std::string objective;
  std::optional<std::uint64_t> cap;
  unsigned threads = 1;
  std::optional<unsigned> refine;
};

void write_sweep_row(std::ostream& os, const CycleReport& r, bool csv, bool& first) {
  if (csv) {
    os << cycle_csv_row(r) << '\n';
  } else {
    os << (first ? "\n" : ",\n") << cycle_json(r);
  }
  first = false;
}

int cmd_sweep(const SweepFlags& f, const CommonOptions& common, Sink& sink) {
  PartialSweep p;
  if (!f.fixed.config_path.empty()) p = parse_sweep_json(read_file(f.fixed.config_path));

  const auto values = f.fixed.cycle_values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i]) p.axes[i] = Axis::fixed(*values[i]);
  }
  if (f.fixed.hbar_omega) p.hbar_omega = f.fixed.hbar_omega;
  if (f.fixed.k_b) p.k_b = f.fixed.k_b;
  if (!f.param.empty()) {
    const auto param = parse_sweep_parameter(f.param);
    if (!param) throw DomainError("param", "unknown parameter '" + f.param + "'");
    if (!f.start || !f.stop || !f.count) {
      throw DomainError("param", "--param needs --start, --stop and --count");
    }
    p.axes[static_cast<std::size_t>(*param)] = Axis{*f.start, *f.stop, *f.count};
  } else if (f.start || f.stop || f.count) {
    throw DomainError("param", "--start/--stop/--count need --param");
  }
  if (!f.objective.empty()) p.objective = parse_objective(f.objective);
  if (f.cap) p.cap = f.cap;

  SweepSpec spec = complete_sweep(p);
  spec.threads = f.threads;
  spec.route = parse_route(common.route);
  const bool csv = common.format == "csv";

  if (f.refine) {
    const RefineResult r = refine_optimum(spec, *f.refine);
    std::ostream& os = sink.stream();
    if (csv) {
      os << kCycleCsvHeader << '\n' << cycle_csv_row(r.best) << '\n';
      os << "# refine: parameter=" << to_string(r.parameter)
         << " iterations=" << r.iterations << " lo=" << format_number(r.lo)
         << " hi=" << format_number(r.hi) << " width=" << format_number(r.width()) << '\n';
    } else {
      os << "{\"parameter\":\"" << to_string(r.parameter) << "\",\"objective\":\""
         << to_string(spec.objective) << "\",\"iterations\":" << r.iterations
         << ",\"lo\":" << format_number(r.lo) << ",\"hi\":" << format_number(r.hi)
         << ",\"width\":" << format_number(r.width()) << ",\"best\":" << cycle_json(r.best)
         << "}\n";
    }
    sink.finish();
    return kExitOk;
  }

  // Validate before the header goes out so malformed specs leave no partial output.
  spec.validate();
  std::ostream& os = sink.stream();
  os << (csv ? std::string(kCycleCsvHeader) + "\n" : std::string("{\"rows\":["));
  bool first = true;
  const SweepSummary summary =
      run_sweep(spec, [&](const CycleReport& r) { write_sweep_row(os, r, csv, first); });
  if (csv) {
    os << "# summary: grid_size=" << summary.grid_size << " rows=" << summary.rows
       << " skipped=" << summary.skipped << " objective=" << to_string(spec.objective) << '\n';
    if (summary.best) os << "# best: " << cycle_csv_row(*summary.best) << '\n';
  } else {
    os << (first ? "" : "\n") << "],\"metadata\":" << sweep_metadata_json(summary, spec.objective)
       << "}\n";
  }
  sink.finish();
  return kExitOk;
}

struct SpectrumFlags {
  double nu = 0.0;
  std::optional<double> e_max;
  std::optional<unsigned> n_max;
  double hbar_omega = 1.0;
};

int cmd_spectrum(const SpectrumFlags& f, const CommonOptions& common, Sink& sink) {
  const StatisticsParameter nu(f.nu);
  if (f.e_max.has_value() == f.n_max.has_value()) {
    throw DomainError("e_max", "give exactly one of --e-max or --n-max");
  }
  EnergyScale{f.hbar_omega, 1.0}.validate();
  const auto levels =
      f.e_max ? enumerate_levels(nu, *f.e_max) : enumerate_levels_to_excitation(*f.n_max);
  sink.stream() << (common.format == "csv" ? spectrum_csv(levels, nu, f.hbar_omega)
                                           : spectrum_json(levels, nu, f.hbar_omega));
  sink.finish();
  return kExitOk;
}

struct VerifyFlags {
  std::vector<double> nus;
  std::vector<double> xs;
  std::vector<std::string> quantities;
  double tolerance = 1e-9;
  double tail_tol = 1e-12;
};

int cmd_verify(const VerifyFlags& f, const CommonOptions& common, Sink& sink) {
  VerifyOptions opts;
  if (!f.nus.empty()) opts.nus = f.nus;
  if (!f.xs.empty()) opts.xs = f.xs;
  if (!f.quantities.empty()) {
    opts.quantities.clear();
    for (const auto& q : f.quantities) opts.quantities.push_back(*parse_quantity(q));
  }
  opts.tolerance = f.tolerance;
  opts.tail_tolerance = f.tail_tol;
  const auto rows = verify_grid(opts);
  sink.stream() << (common.format == "csv" ? verify_csv(rows) : verify_json(rows, f.tolerance));
  sink.finish();
  const bool all = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-anyon quantum Carnot engine: cycles, sweeps, spectra and closed-form checks",
               "anyon-carnot"};
  app.require_subcommand(1);

  CommonOptions common;

  ConfigFlags cycle_flags;
  auto* cycle = app.add_subcommand("cycle", "Run one cycle and report heats, work and efficiency");
  cycle_flags.add_to(cycle, true);
  add_common(cycle, common, true);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Evaluate the cycle over a parameter grid");
  sweep_flags.fixed.add_to(sweep, true);
  sweep->add_option("--param", sweep_flags.param, "Ranged parameter (t_h, t_c, nu_a..nu_d)");
  sweep->add_option("--start", sweep_flags.start, "Range start");
  sweep->add_option("--stop", sweep_flags.stop, "Range stop");
  sweep->add_option("--count", sweep_flags.count, "Number of grid points");
  sweep->add_option("--objective", sweep_flags.objective, "none, max_work or max_efficiency")
      ->check(CLI::IsMember({"none", "max_work", "max_efficiency"}));
  sweep->add_option("--cap", sweep_flags.cap, "Maximum grid size (default 1000000)");
  sweep->add_option("--threads", sweep_flags.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();
  sweep->add_option("--refine", sweep_flags.refine,
                    "Refine the optimum of a single ranged parameter this many times");
  add_common(sweep, common, true);

  SpectrumFlags spectrum_flags;
  auto* spectrum = app.add_subcommand("spectrum", "List energy levels in deterministic order");
  spectrum->add_option("--nu", spectrum_flags.nu, "Statistics parameter in [0, 2]")->required();
  auto* e_max = spectrum->add_option("--e-max", spectrum_flags.e_max, "Energy cutoff (hbar*omega)");
  auto* n_max = spectrum->add_option("--n-max", spectrum_flags.n_max, "Excitation cutoff");
  e_max->excludes(n_max);
  spectrum->add_option("--hbar-omega", spectrum_flags.hbar_omega, "Energy unit")
      ->capture_default_str();
  add_common(spectrum, common, false);

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with truncated level sums");
  verify->add_option("--nu", verify_flags.nus, "Statistics parameter grid")->delimiter(',');
  verify->add_option("--x", verify_flags.xs, "Grid of x = beta*hbar*omega")->delimiter(',');
  verify->add_option("--quantity", verify_flags.quantities, "Z, E, E_cross, S")
      ->delimiter(',')
      ->check(CLI::IsMember({"Z", "E", "E_cross", "S"}));
  verify->add_option("--tolerance", verify_flags.tolerance, "Relative tolerance per row")
      ->capture_default_str();
  verify->add_option("--tail-tol", verify_flags.tail_tol, "Relative tail bound for the sums")
      ->capture_default_str();
  add_common(verify, common, false);

  std::vector<std::string> argv_storage{"anyon-carnot"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*cycle) {
      Sink sink(out, common.output);
      return cmd_cycle(cycle_flags, common, sink);
    }
    if (*sweep) {
      Sink sink(out, common.output);
      return cmd_sweep(sweep_flags, common, sink);
    }
    if (*spectrum) {
      Sink sink(out, common.output);
      return cmd_spectrum(spectrum_flags, common, sink);
    }
    Sink sink(out, common.output);
    return cmd_verify(verify_flags, common, sink);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const GridCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceCap;
  }
}

}  // namespace anyon
