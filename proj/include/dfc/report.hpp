#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dfc/gamma.hpp"
#include "dfc/rational.hpp"

namespace dfc {

enum class Status { exact, float_only, mismatch, domain_excluded, pole };

std::string_view to_string(Status status) noexcept;
Status status_from_string(std::string_view text);

/// Parameter name/value pairs in the order the verifier declares them.
using ParamList = std::vector<std::pair<std::string, Rational>>;

/// Outcome of checking one identity at one parameter point.
struct VerificationReport {
  std::string identity;
  ParamList params;
  Status status = Status::mismatch;
  std::string lhs;
  std::string rhs;
  std::optional<double> lhs_float;
  std::optional<double> rhs_float;
  std::optional<double> abs_float_gap;
  // For domain_excluded: the violated precondition. Otherwise usually empty.
  std::string detail;

  bool is_failure() const noexcept {
    return status == Status::mismatch || status == Status::float_only;
  }
};

/// Formal comparison of two exact values: exact when lhs - rhs is the zero
/// polynomial, float_only when the difference is numerically negligible,
/// mismatch otherwise.
VerificationReport compare_values(std::string identity, ParamList params, const GammaPolynomial& lhs,
                                  const GammaPolynomial& rhs);

VerificationReport excluded(std::string identity, ParamList params, std::string detail,
                            std::string lhs = {}, std::string rhs = {});

/// {"identity", "params", "status", "lhs", "rhs", "abs_float_gap"} plus
/// "detail" when non-empty. Params keep declaration order.
nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& doc);

/// Relative threshold for float_only: |diff| <= 1e-9 * (1 + max(|lhs|, |rhs|)).
inline constexpr double kFloatOnlyTolerance = 1e-9;

}  // namespace dfc
