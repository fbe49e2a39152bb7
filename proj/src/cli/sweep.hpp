#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli/registry.hpp"
#include "dfc/error.hpp"
#include "dfc/report.hpp"

namespace dfc::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { json, csv };

OutputFormat parse_format(const std::string& text);

/// One identity swept over a cartesian product of parameter values.
struct SweepConfig {
  std::string identity;
  std::map<std::string, Rational> fixed;
  std::map<std::string, std::vector<Rational>> swept;
  std::size_t max_window = 12;
  OutputFormat output = OutputFormat::json;
  std::uint64_t seed = 1;
  bool force = false;
};

/// Distinct reduced fractions n/d with lo <= n <= hi and 1 <= d <= den_max,
/// ascending.
std::vector<Rational> expand_range(long lo, long hi, long den_max);

/// Parses one sweep object. Fields missing from `doc` come from `defaults`.
SweepConfig sweep_from_json(const nlohmann::json& doc, const SweepConfig& defaults = {});

/// Accepts either a single sweep object or {"sweeps": [...], ...shared fields}.
std::vector<SweepConfig> suite_from_json(const nlohmann::json& doc);

/// The built-in suite run by `verify all` without --config (configs/sweeps.json).
std::vector<SweepConfig> default_suite();

struct SweepPoint {
  const Verifier* verifier = nullptr;
  ParamValues values;
  RunContext context;
};

/// Validates the config against the verifier signature and expands the
/// cartesian product; the last declared parameter varies fastest.
std::vector<SweepPoint> expand(const SweepConfig& config);

/// Runs every point, possibly in parallel; reports come back in point order.
/// Library errors raised by a point become domain_excluded reports.
std::vector<VerificationReport> run_points(const std::vector<SweepPoint>& points, unsigned jobs);

struct StatusCounts {
  std::map<Status, std::size_t> by_status;
  std::size_t total = 0;

  void add(const VerificationReport& r);
  bool has_failures() const;
};

void write_csv_header(std::ostream& out);
void write_report(std::ostream& out, const VerificationReport& r, OutputFormat format);
void write_summary(std::ostream& out, const StatusCounts& counts, OutputFormat format);

}  // namespace dfc::cli
