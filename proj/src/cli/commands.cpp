#include "cli/commands.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli/registry.hpp"
#include "cli/sweep.hpp"
#include "dfc/error.hpp"
#include "dfc/fracops.hpp"
#include "dfc/identities.hpp"
#include "dfc/special.hpp"

namespace dfc::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// String-valued flags of one subcommand, looked up by name after parsing.
class FlagSet {
 public:
  void add(CLI::App& app, const std::string& name, const std::string& help) {
    options_[name] = app.add_option("--" + name, values_[name], help);
  }

  bool has(const std::string& name) const { return options_.at(name)->count() > 0; }

  const std::string& raw(const std::string& name) const {
    if (!has(name)) throw UsageError("missing required flag --" + name);
    return values_.at(name);
  }

  Rational rational(const std::string& name) const {
    try {
      return Rational::parse(raw(name));
    } catch (const ParseError& e) {
      throw UsageError("--" + name + ": " + e.what());
    }
  }

  Rational rational_or(const std::string& name, const Rational& fallback) const {
    return has(name) ? rational(name) : fallback;
  }

  std::size_t count(const std::string& name) const {
    const Rational v = rational(name);
    const auto n = v.to_long();
    if (!n || *n < 0) throw UsageError(name + " must be a nonnegative integer");
    return static_cast<std::size_t>(*n);
  }

  std::size_t count_or(const std::string& name, std::size_t fallback) const {
    return has(name) ? count(name) : fallback;
  }

  const std::map<std::string, CLI::Option*>& options() const { return options_; }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, CLI::Option*> options_;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void require_only(const FlagSet& flags, const std::vector<std::string>& allowed, const std::string& subject) {
  for (const auto& [name, opt] : flags.options()) {
    if (opt->count() == 0) continue;
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      throw UsageError("--" + name + " is not used by " + subject);
    }
  }
}

void emit_value(std::ostream& out, const std::string& subject, const std::string& value, bool json) {
  if (json) {
    out << nlohmann::ordered_json{{"subject", subject}, {"value", value}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
}

void emit_grid(std::ostream& out, const std::string& subject, const GridFunction& g, std::optional<std::size_t> at,
               bool json) {
  if (at) {
    emit_value(out, subject, g.at(*at).str(), json);
    return;
  }
  if (json) {
    out << g.to_json().dump() << '\n';
    return;
  }
  for (const auto& v : g.values()) out << v.str() << '\n';
}

// Applies one of the grid operators named by subject.
GridFunction apply_operator(const std::string& subject, const FlagSet& flags) {
  const Rational a = flags.rational_or("a", Rational(0));
  const GridFunction f = make_input(flags.raw("f"), a, flags.count_or("len", 0));
  if (subject == "fracsum") return frac_sum_diff(f, FracOrder(flags.rational("nu")));
  if (subject == "mrdiff") return mr_frac_diff(f, flags.rational("mu"));
  if (subject == "aediff") return ae_frac_diff(f, flags.rational("mu"));
  if (subject == "input") return f;
  throw UsageError("unknown operator '" + subject + "'");
}

int cmd_eval(const std::string& subject, const FlagSet& flags, const std::string& format, std::ostream& out) {
  const bool json = format == "json";
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
  if (subject == "falling" || subject == "poch") {
    require_only(flags, {"x", "y"}, subject);
    const Rational x = flags.rational("x");
    const Rational y = flags.rational("y");
    emit_value(out, subject, (subject == "falling" ? falling(x, y) : pochhammer(x, y)).str(), json);
  } else if (subject == "binom") {
    require_only(flags, {"alpha", "n"}, subject);
    emit_value(out, subject, gen_binomial(flags.rational("alpha"), flags.count("n")).str(), json);
  } else if (subject == "fracsum" || subject == "mrdiff" || subject == "aediff") {
    require_only(flags, {"a", subject == "fracsum" ? "nu" : "mu", "f", "len", "at"}, subject);
    const GridFunction g = apply_operator(subject, flags);
    emit_grid(out, subject, g, flags.has("at") ? std::optional(flags.count("at")) : std::nullopt, json);
  } else if (subject == "nabla") {
    require_only(flags, {"a", "p", "alpha", "t-index"}, subject);
    const GammaPolynomial v = nabla_poch_diff(flags.rational("a"), flags.rational("p"), flags.rational("alpha"),
                                              flags.count("t-index"));
    emit_value(out, subject, v.str(), json);
  } else if (subject == "hyp3f2") {
    require_only(flags, {"a1", "a2", "m", "b1", "b2", "z"}, subject);
    const Rational v = hyp3f2_terminating(flags.rational("a1"), flags.rational("a2"), flags.count("m"),
                                          flags.rational("b1"), flags.rational("b2"),
                                          flags.rational_or("z", Rational(1)));
    emit_value(out, subject, v.str(), json);
  } else {
    throw UsageError("unknown eval subject '" + subject +
                     "' (expected falling, poch, binom, fracsum, mrdiff, aediff, nabla, hyp3f2)");
  }
  return kSuccess;
}

int cmd_table(const std::string& subject, const FlagSet& flags, const std::string& format, std::ostream& out) {
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  GridFunction g = [&] {
    if (subject == "falling-power") {
      require_only(flags, {"a", "mu", "len"}, subject);
      return sample_falling_power(flags.rational_or("a", Rational(0)), flags.rational("mu"), flags.count("len"));
    }
    if (subject == "fracsum" || subject == "mrdiff" || subject == "aediff" || subject == "input") {
      require_only(flags, {"a", subject == "fracsum" ? "nu" : "mu", "f", "len"}, subject);
      return apply_operator(subject, flags);
    }
    throw UsageError("unknown table subject '" + subject +
                     "' (expected falling-power, fracsum, mrdiff, aediff, input)");
  }();
  if (format == "json") {
    out << g.to_json().dump() << '\n';
    return kSuccess;
  }
  out << "point,value\n";
  for (std::size_t k = 0; k < g.size(); ++k) out << g.point(k).str() << ',' << g[k].str() << '\n';
  return kSuccess;
}

struct VerifyOptions {
  std::string config_path;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_window;
  bool force = false;
  unsigned jobs = 0;
};

nlohmann::json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

int cmd_verify(const std::string& identity, const FlagSet& flags, const VerifyOptions& opts, std::ostream& out) {
  std::vector<SweepConfig> suite;
  std::optional<OutputFormat> suite_format;
  if (!opts.config_path.empty()) {
    const nlohmann::json doc = read_config(opts.config_path);
    suite = suite_from_json(doc);
    if (doc.contains("output")) suite_format = suite.front().output;
  } else if (identity == "all") {
    suite = default_suite();
  } else {
    suite.push_back(SweepConfig{});
  }
  if (suite.empty()) throw ConfigError("config holds no sweeps");

  bool any_flag = false;
  for (const auto& [name, opt] : flags.options()) any_flag = any_flag || opt->count() > 0;
  if (identity == "all") {
    if (any_flag) throw UsageError("parameter flags cannot be combined with 'verify all'");
  } else {
    if (suite.size() != 1) throw ConfigError("verify " + identity + " needs a config holding a single sweep");
    SweepConfig& cfg = suite.front();
    if (!cfg.identity.empty() && cfg.identity != identity) {
      throw ConfigError("config is for '" + cfg.identity + "', not '" + identity + "'");
    }
    cfg.identity = identity;
    for (const auto& [name, opt] : flags.options()) {
      if (opt->count() == 0) continue;
      std::vector<Rational> values;
      for (const auto& lit : split_commas(flags.raw(name))) {
        try {
          values.push_back(Rational::parse(lit));
        } catch (const ParseError& e) {
          throw UsageError("--" + name + ": " + e.what());
        }
      }
      if (values.empty()) throw UsageError("--" + name + " needs a value");
      cfg.fixed.erase(name);
      cfg.swept.erase(name);
      if (values.size() == 1) {
        cfg.fixed.emplace(name, values.front());
      } else {
        cfg.swept.emplace(name, std::move(values));
      }
    }
  }

  for (auto& cfg : suite) {
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.max_window) cfg.max_window = *opts.max_window;
    if (opts.force) cfg.force = true;
  }
  const OutputFormat format = opts.format ? parse_format(*opts.format) : suite_format.value_or(suite.front().output);

  // Expand everything before printing so config errors never leave partial output.
  std::vector<std::vector<SweepPoint>> expanded;
  for (const auto& cfg : suite) expanded.push_back(expand(cfg));

  const unsigned jobs = opts.jobs > 0 ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  StatusCounts counts;
  if (format == OutputFormat::csv) write_csv_header(out);
  for (const auto& points : expanded) {
    for (const auto& r : run_points(points, jobs)) {
      counts.add(r);
      write_report(out, r, format);
    }
  }
  write_summary(out, counts, format);
  return counts.has_failures() ? kVerificationFailure : kSuccess;
}

}  // namespace

GridFunction make_input(const std::string& spec, const Rational& a, std::size_t len) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("function spec '" + spec + "' needs a kind prefix");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "values") {
    std::vector<GammaPolynomial> values;
    for (const auto& lit : split_commas(body)) values.emplace_back(Rational::parse(lit));
    if (values.empty()) throw UsageError("values: spec needs at least one sample");
    if (len > values.size()) throw WindowTooShort("--len exceeds the number of given samples");
    if (len > 0) values.resize(len);
    return GridFunction(a, std::move(values));
  }
  if (len == 0) throw UsageError("--len is required for " + kind + ": inputs");
  if (kind == "const") {
    const Rational c = Rational::parse(body);
    return sample_closure(a, len, [&](std::size_t) { return GammaPolynomial(c); });
  }
  if (kind == "power") {
    const Rational mu = Rational::parse(body);
    const GridFunction sampled = sample_falling_power(a - mu, mu, len);
    return sampled;
  }
  if (kind == "random") {
    const Rational seed = Rational::parse(body);
    const auto s = seed.to_long();
    if (!s || *s < 0) throw UsageError("random: seed must be a nonnegative integer");
    std::mt19937_64 rng(static_cast<std::uint64_t>(*s));
    return random_rational_window(a, len, rng);
  }
  throw UsageError("unknown function kind '" + kind + "' (expected const, values, power, random)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrete fractional calculus: operators and identity verification", "dfc"};
  app.require_subcommand(1);

  std::string eval_subject, eval_format = "text";
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a special function or operator exactly");
  eval->add_option("subject", eval_subject, "falling|poch|binom|fracsum|mrdiff|aediff|nabla|hyp3f2")->required();
  eval->add_option("--format", eval_format, "text or json");
  FlagSet eval_flags;
  for (const char* name : {"x", "y", "alpha", "n", "a", "nu", "mu", "p", "t-index", "f", "len", "at", "a1", "a2", "m",
                           "b1", "b2", "z"}) {
    eval_flags.add(*eval, name, "");
  }

  std::string table_subject, table_format = "csv";
  CLI::App* table = app.add_subcommand("table", "Tabulate a grid function as point,value rows");
  table->add_option("subject", table_subject, "falling-power|fracsum|mrdiff|aediff|input")->required();
  table->add_option("--format", table_format, "csv or json");
  FlagSet table_flags;
  for (const char* name : {"a", "mu", "nu", "f", "len"}) table_flags.add(*table, name, "");

  std::string identity;
  VerifyOptions vopts;
  std::string vformat;
  std::uint64_t vseed = 0;
  std::size_t vwindow = 0;
  CLI::App* verify = app.add_subcommand("verify", "Verify an identity over a parameter sweep");
  verify->add_option("identity", identity, "identity name or 'all'")->required();
  verify->add_option("--config", vopts.config_path, "JSON sweep config");
  auto* format_opt = verify->add_option("--format", vformat, "json or csv");
  auto* seed_opt = verify->add_option("--seed", vseed, "seed for random grid functions");
  auto* window_opt = verify->add_option("--max-window", vwindow, "window length for random grid functions");
  verify->add_flag("--force", vopts.force, "evaluate outside the stated hypotheses");
  verify->add_option("--jobs", vopts.jobs, "worker threads (default: hardware concurrency)");
  FlagSet verify_flags;
  for (const auto& name : all_param_names()) verify_flags.add(*verify, name, "value or comma-separated list");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_subject, eval_flags, eval_format, out);
    if (table->parsed()) return cmd_table(table_subject, table_flags, table_format, out);
    if (format_opt->count()) vopts.format = vformat;
    if (seed_opt->count()) vopts.seed = vseed;
    if (window_opt->count()) {
      if (vwindow < 1) throw UsageError("--max-window must be at least 1");
      vopts.max_window = vwindow;
    }
    if (identity != "all" && !find_verifier(identity)) throw UsageError("no verifier named '" + identity + "'");
    return cmd_verify(identity, verify_flags, vopts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace dfc::cli
