#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfc/rational.hpp"
#include "dfc/report.hpp"

namespace dfc::cli {

enum class ParamKind { rational, count };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::rational;
  std::optional<std::string> default_value;
};

struct RunContext {
  std::uint64_t seed = 1;
  std::size_t max_window = 12;
  bool force = false;
};

using ParamValues = std::map<std::string, Rational>;

struct Verifier {
  std::string name;
  std::vector<ParamSpec> params;
  std::function<std::vector<VerificationReport>(const ParamValues&, const RunContext&)> run;
};

/// Every verifier reachable from `verify <identity>`, in suite order.
const std::vector<Verifier>& verifiers();

/// nullptr when no verifier has that name.
const Verifier* find_verifier(const std::string& name);

/// Union of parameter names across all verifiers, sorted.
std::vector<std::string> all_param_names();

}  // namespace dfc::cli
