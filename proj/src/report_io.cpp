#include "anyon_carnot/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "anyon_carnot/errors.hpp"

namespace anyon {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

const char* json_bool(bool b) { return b ? "true" : "false"; }

// Minimal writer for flat objects whose values are already rendered.
class ObjectWriter {
 public:
  ObjectWriter& raw(std::string_view key, std::string_view value) {
    out_ += first_ ? "{" : ",";
    first_ = false;
    out_ += '"';
    out_ += key;
    out_ += "\":";
    out_ += value;
    return *this;
  }
  ObjectWriter& number(std::string_view key, double v) { return raw(key, json_number(v)); }
  ObjectWriter& boolean(std::string_view key, bool b) { return raw(key, json_bool(b)); }
  ObjectWriter& string(std::string_view key, std::string_view s) {
    return raw(key, json(std::string(s)).dump());
  }
  std::string str() const { return first_ ? "{}" : out_ + "}"; }

 private:
  std::string out_;
  bool first_ = true;
};

const std::array<std::string_view, 6> kCycleKeys = {"t_h", "t_c", "nu_a", "nu_b", "nu_c", "nu_d"};

double number_field(const json& value, const std::string& key) {
  if (!value.is_number()) throw DomainError(key, "must be a number");
  return value.get<double>();
}

json parse_object(std::string_view text, std::string_view what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string(what), std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError(std::string(what), "expected a JSON object");
  return doc;
}

}  // namespace

std::string cycle_csv_row(const CycleReport& r) {
  const CycleConfig& c = r.config;
  std::string row;
  for (double v : {c.t_h, c.t_c, c.nu_a, c.nu_b, c.nu_c, c.nu_d, r.q_in, r.q_out, r.work,
                   r.eta_qce.value_or(std::nan("")), r.eta_cce}) {
    row += format_number(v);
    row += ',';
  }
  row += json_bool(r.valid());
  return row;
}

std::string cycle_json(const CycleReport& r) {
  const CycleConfig& c = r.config;
  const std::string flags = ObjectWriter{}
                                .boolean("positive_work", r.flags.positive_work)
                                .boolean("q_in_positive", r.flags.q_in_positive)
                                .boolean("eta_below_carnot", r.flags.eta_below_carnot)
                                .str();
  return ObjectWriter{}
      .number("t_h", c.t_h)
      .number("t_c", c.t_c)
      .number("nu_a", c.nu_a)
      .number("nu_b", c.nu_b)
      .number("nu_c", c.nu_c)
      .number("nu_d", c.nu_d)
      .number("q_in", r.q_in)
      .number("q_out", r.q_out)
      .number("work", r.work)
      .raw("eta_qce", r.eta_qce ? json_number(*r.eta_qce) : "null")
      .number("eta_cce", r.eta_cce)
      .raw("flags", flags)
      .str();
}

PartialConfig parse_config_json(std::string_view text) {
  const json doc = parse_object(text, "config");
  PartialConfig p;
  for (const auto& [key, value] : doc.items()) {
    const double v = number_field(value, key);
    if (key == "t_h") p.t_h = v;
    else if (key == "t_c") p.t_c = v;
    else if (key == "nu_a") p.nu_a = v;
    else if (key == "nu_b") p.nu_b = v;
    else if (key == "nu_c") p.nu_c = v;
    else if (key == "nu_d") p.nu_d = v;
    else if (key == "hbar_omega") p.hbar_omega = v;
    else if (key == "k_b") p.k_b = v;
    else throw DomainError(key, "unknown config key");
  }
  return p;
}

CycleConfig complete_config(const PartialConfig& p) {
  const std::optional<double>* fields[] = {&p.t_h, &p.t_c, &p.nu_a, &p.nu_b, &p.nu_c, &p.nu_d};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!*fields[i]) throw DomainError(std::string(kCycleKeys[i]), "missing");
  }
  CycleConfig c{*p.t_h, *p.t_c, *p.nu_a, *p.nu_b, *p.nu_c, *p.nu_d};
  c.scale.hbar_omega = p.hbar_omega.value_or(1.0);
  c.scale.k_b = p.k_b.value_or(1.0);
  return c;
}

std::string config_json(const CycleConfig& c) {
  return ObjectWriter{}
      .number("t_h", c.t_h)
      .number("t_c", c.t_c)
      .number("nu_a", c.nu_a)
      .number("nu_b", c.nu_b)
      .number("nu_c", c.nu_c)
      .number("nu_d", c.nu_d)
      .number("hbar_omega", c.scale.hbar_omega)
      .number("k_b", c.scale.k_b)
      .str();
}

PartialSweep parse_sweep_json(std::string_view text) {
  const json doc = parse_object(text, "sweep");
  PartialSweep p;
  for (const auto& [key, value] : doc.items()) {
    if (auto param = parse_sweep_parameter(key)) {
      auto& slot = p.axes[static_cast<std::size_t>(*param)];
      if (value.is_number()) {
        slot = Axis::fixed(value.get<double>());
        continue;
      }
      if (!value.is_object()) throw DomainError(key, "expected a number or {start, stop, count}");
      Axis a;
      for (const auto& [sub, v] : value.items()) {
        const std::string field = key + "." + sub;
        if (sub == "start") a.start = number_field(v, field);
        else if (sub == "stop") a.stop = number_field(v, field);
        else if (sub == "count") {
          if (!v.is_number_integer() || v.get<long long>() < 0 ||
              v.get<long long>() > 100'000'000) {
            throw DomainError(field, "must be a non-negative integer");
          }
          a.count = v.get<unsigned>();
        } else {
          throw DomainError(field, "unknown axis key");
        }
      }
      if (!value.contains("start") || !value.contains("stop") || !value.contains("count")) {
        throw DomainError(key, "axis needs start, stop and count");
      }
      slot = a;
    } else if (key == "hbar_omega") {
      p.hbar_omega = number_field(value, key);
    } else if (key == "k_b") {
      p.k_b = number_field(value, key);
    } else if (key == "objective") {
      if (!value.is_string()) throw DomainError(key, "must be a string");
      p.objective = parse_objective(value.get<std::string>());
      if (!p.objective) throw DomainError(key, "expected none, max_work or max_efficiency");
    } else if (key == "cap") {
      if (!value.is_number_unsigned()) throw DomainError(key, "must be a positive integer");
      p.cap = value.get<std::uint64_t>();
    } else {
      throw DomainError(key, "unknown sweep key");
    }
  }
  return p;
}

SweepSpec complete_sweep(const PartialSweep& p) {
  SweepSpec spec;
  for (auto param : kSweepParameters) {
    const auto& a = p.axes[static_cast<std::size_t>(param)];
    if (!a) throw DomainError(std::string(to_string(param)), "missing");
    spec.axis(param) = *a;
  }
  spec.scale.hbar_omega = p.hbar_omega.value_or(1.0);
  spec.scale.k_b = p.k_b.value_or(1.0);
  spec.objective = p.objective.value_or(Objective::none);
  spec.cap = p.cap.value_or(kDefaultGridCap);
  return spec;
}

std::string sweep_metadata_json(const SweepSummary& s, Objective objective) {
  return ObjectWriter{}
      .raw("grid_size", std::to_string(s.grid_size))
      .raw("rows", std::to_string(s.rows))
      .raw("skipped", std::to_string(s.skipped))
      .string("objective", to_string(objective))
      .raw("best", s.best ? cycle_json(*s.best) : "null")
      .str();
}

std::string spectrum_csv(const std::vector<LevelIndex>& levels, StatisticsParameter nu,
                         double hbar_omega) {
  std::string out(kSpectrumCsvHeader);
  out += '\n';
  for (const auto& lv : levels) {
    out += to_string(lv.cls);
    for (unsigned q : {lv.j, lv.k, lv.l, lv.m}) {
      out += ',';
      out += std::to_string(q);
    }
    out += ',';
    out += format_number(hbar_omega * energy(lv, nu));
    out += '\n';
  }
  return out;
}

std::string spectrum_json(const std::vector<LevelIndex>& levels, StatisticsParameter nu,
                          double hbar_omega) {
  std::string rows = "[";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    if (i) rows += ',';
    rows += ObjectWriter{}
                .string("class", to_string(lv.cls))
                .raw("j", std::to_string(lv.j))
                .raw("k", std::to_string(lv.k))
                .raw("l", std::to_string(lv.l))
                .raw("m", std::to_string(lv.m))
                .number("energy", hbar_omega * energy(lv, nu))
                .str();
  }
  rows += ']';
  return ObjectWriter{}.number("nu", nu.value()).raw("levels", rows).str() + "\n";
}

std::string verify_csv(const std::vector<VerifyRow>& rows) {
  std::string out(kVerifyCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += to_string(r.quantity);
    for (double v : {r.nu, r.nu_prime, r.x, r.closed, r.truncated, r.rel_err, r.tail_bound}) {
      out += ',';
      out += format_number(v);
    }
    out += ',';
    out += std::to_string(r.n_max);
    out += ',';
    out += json_bool(r.pass);
    out += '\n';
  }
  return out;
}

std::string verify_json(const std::vector<VerifyRow>& rows, double tolerance) {
  std::string list = "[";
  bool all = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    all = all && r.pass;
    if (i) list += ",\n";
    list += ObjectWriter{}
                .string("quantity", to_string(r.quantity))
                .number("nu", r.nu)
                .number("nu_prime", r.nu_prime)
                .number("x", r.x)
                .number("closed", r.closed)
                .number("truncated", r.truncated)
                .number("rel_err", r.rel_err)
                .number("tail_bound", r.tail_bound)
                .raw("n_max", std::to_string(r.n_max))
                .boolean("pass", r.pass)
                .str();
  }
  list += ']';
  return ObjectWriter{}
             .number("tolerance", tolerance)
             .boolean("pass", all)
             .raw("rows", list)
             .str() +
         "\n";
}

}  // namespace anyon
