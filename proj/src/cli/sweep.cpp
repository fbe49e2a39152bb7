#include "cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <set>
#include <thread>

#include "cli/default_suite.hpp"

namespace dfc::cli {

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw ConfigError("output must be json or csv, got '" + text + "'");
}

std::vector<Rational> expand_range(long lo, long hi, long den_max) {
  if (lo > hi) throw ConfigError("range numerator bounds are reversed");
  if (den_max < 1) throw ConfigError("range den_max must be at least 1");
  std::set<Rational> values;
  for (long d = 1; d <= den_max; ++d) {
    for (long n = lo; n <= hi; ++n) values.insert(Rational(n, d));
  }
  return {values.begin(), values.end()};
}

namespace {

Rational literal(const nlohmann::json& v, const std::string& name) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError("parameter " + name + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ConfigError("parameter " + name + " must be a rational literal string or an integer");
}

std::vector<Rational> swept_values(const nlohmann::json& v, const std::string& name) {
  if (v.is_array()) {
    std::vector<Rational> out;
    for (const auto& item : v) out.push_back(literal(item, name));
    if (out.empty()) throw ConfigError("swept parameter " + name + " has no values");
    return out;
  }
  if (v.is_object() && v.contains("num")) {
    const auto& num = v["num"];
    if (!num.is_array() || num.size() != 2 || !num[0].is_number_integer() || !num[1].is_number_integer()) {
      throw ConfigError("range for " + name + " needs \"num\": [lo, hi]");
    }
    const long den_max = v.value("den_max", 1L);
    return expand_range(num[0].get<long>(), num[1].get<long>(), den_max);
  }
  throw ConfigError("swept parameter " + name + " must be a list or a {\"num\", \"den_max\"} range");
}

}  // namespace

SweepConfig sweep_from_json(const nlohmann::json& doc, const SweepConfig& defaults) {
  if (!doc.is_object()) throw ConfigError("sweep config must be a JSON object");
  static const std::set<std::string> known{"identity", "fixed", "swept", "max_window", "output", "seed", "force"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw ConfigError("unknown sweep config field '" + key + "'");
  }
  SweepConfig cfg = defaults;
  cfg.fixed.clear();
  cfg.swept.clear();
  try {
    if (doc.contains("identity")) cfg.identity = doc["identity"].get<std::string>();
    if (doc.contains("max_window")) cfg.max_window = doc["max_window"].get<std::size_t>();
    if (doc.contains("output")) cfg.output = parse_format(doc["output"].get<std::string>());
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("force")) cfg.force = doc["force"].get<bool>();
    if (doc.contains("fixed")) {
      for (const auto& [name, value] : doc["fixed"].items()) cfg.fixed.emplace(name, literal(value, name));
    }
    if (doc.contains("swept")) {
      for (const auto& [name, value] : doc["swept"].items()) cfg.swept.emplace(name, swept_values(value, name));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed sweep config: ") + e.what());
  }
  if (cfg.max_window < 1) throw ConfigError("max_window must be at least 1");
  return cfg;
}

std::vector<SweepConfig> suite_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("sweeps")) return {sweep_from_json(doc)};
  nlohmann::json shared = doc;
  shared.erase("sweeps");
  const SweepConfig defaults = sweep_from_json(shared);
  if (!doc["sweeps"].is_array()) throw ConfigError("\"sweeps\" must be an array");
  std::vector<SweepConfig> out;
  for (const auto& s : doc["sweeps"]) out.push_back(sweep_from_json(s, defaults));
  return out;
}

std::vector<SweepConfig> default_suite() { return suite_from_json(nlohmann::json::parse(kDefaultSuiteJson)); }

std::vector<SweepPoint> expand(const SweepConfig& config) {
  const Verifier* verifier = find_verifier(config.identity);
  if (!verifier) throw ConfigError("no verifier named '" + config.identity + "'");

  std::set<std::string> declared;
  for (const auto& p : verifier->params) declared.insert(p.name);
  for (const auto& [name, _] : config.fixed) {
    if (!declared.contains(name)) throw ConfigError(config.identity + " has no parameter '" + name + "'");
  }
  for (const auto& [name, _] : config.swept) {
    if (!declared.contains(name)) throw ConfigError(config.identity + " has no parameter '" + name + "'");
    if (config.fixed.contains(name)) throw ConfigError("parameter '" + name + "' is both fixed and swept");
  }

  std::vector<std::pair<std::string, std::vector<Rational>>> axes;
  for (const auto& spec : verifier->params) {
    std::vector<Rational> values;
    if (auto it = config.fixed.find(spec.name); it != config.fixed.end()) {
      values = {it->second};
    } else if (auto jt = config.swept.find(spec.name); jt != config.swept.end()) {
      values = jt->second;
    } else if (spec.default_value) {
      values = {Rational::parse(*spec.default_value)};
    } else {
      throw ConfigError(config.identity + " needs parameter '" + spec.name + "'");
    }
    if (spec.kind == ParamKind::count) {
      for (const auto& v : values) {
        if (!v.is_integer() || v.sign() < 0 || v > Rational(100000)) {
          throw ConfigError(spec.name + " must be a nonnegative integer, got " + v.str());
        }
      }
    }
    axes.emplace_back(spec.name, std::move(values));
  }

  const RunContext ctx{config.seed, config.max_window, config.force};
  std::vector<SweepPoint> points;
  std::vector<std::size_t> cursor(axes.size(), 0);
  while (true) {
    SweepPoint point{verifier, {}, ctx};
    for (std::size_t i = 0; i < axes.size(); ++i) point.values.emplace(axes[i].first, axes[i].second[cursor[i]]);
    points.push_back(std::move(point));
    std::size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++cursor[axis] < axes[axis].second.size()) break;
      cursor[axis] = 0;
      if (axis == 0) return points;
    }
    if (axes.empty()) return points;
  }
}

namespace {

std::vector<VerificationReport> run_point(const SweepPoint& point) {
  try {
    return point.verifier->run(point.values, point.context);
  } catch (const Error& e) {
    ParamList params;
    for (const auto& spec : point.verifier->params) params.emplace_back(spec.name, point.values.at(spec.name));
    return {excluded(point.verifier->name, std::move(params), e.what())};
  }
}

}  // namespace

std::vector<VerificationReport> run_points(const std::vector<SweepPoint>& points, unsigned jobs) {
  std::vector<std::vector<VerificationReport>> results(points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) results[i] = run_point(points[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < points.size(); i = next++) results[i] = run_point(points[i]);
      });
    }
  }
  std::vector<VerificationReport> flat;
  for (auto& batch : results) {
    for (auto& r : batch) flat.push_back(std::move(r));
  }
  return flat;
}

void StatusCounts::add(const VerificationReport& r) {
  ++by_status[r.status];
  ++total;
}

bool StatusCounts::has_failures() const {
  const auto count = [&](Status s) {
    const auto it = by_status.find(s);
    return it == by_status.end() ? std::size_t{0} : it->second;
  };
  return count(Status::mismatch) > 0 || count(Status::float_only) > 0;
}

namespace {

std::string csv_params(const ParamList& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + value.str();
  }
  return out;
}

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  return text;
}

constexpr Status kAllStatuses[] = {Status::exact, Status::float_only, Status::mismatch, Status::domain_excluded,
                                   Status::pole};

}  // namespace

void write_csv_header(std::ostream& out) { out << "identity,params,status,lhs,rhs,abs_float_gap,detail\n"; }

void write_report(std::ostream& out, const VerificationReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << r.identity << ',' << csv_params(r.params) << ',' << to_string(r.status) << ',' << r.lhs << ',' << r.rhs
      << ',';
  if (r.abs_float_gap) out << nlohmann::json(*r.abs_float_gap).dump();
  out << ',' << csv_safe(r.detail) << '\n';
}

void write_summary(std::ostream& out, const StatusCounts& counts, OutputFormat format) {
  nlohmann::ordered_json summary;
  for (Status s : kAllStatuses) {
    const auto it = counts.by_status.find(s);
    summary[std::string(to_string(s))] = it == counts.by_status.end() ? 0 : it->second;
  }
  summary["total"] = counts.total;
  if (format == OutputFormat::json) {
    out << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
    return;
  }
  out << "# summary";
  for (const auto& [name, value] : summary.items()) out << ' ' << name << '=' << value.dump();
  out << '\n';
}

}  // namespace dfc::cli
