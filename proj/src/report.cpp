#include "dfc/report.hpp"

#include <algorithm>
#include <cmath>

#include "dfc/error.hpp"

namespace dfc {

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::exact: return "exact";
    case Status::float_only: return "float_only";
    case Status::mismatch: return "mismatch";
    case Status::domain_excluded: return "domain_excluded";
    case Status::pole: return "pole";
  }
  return "mismatch";
}

Status status_from_string(std::string_view text) {
  for (Status s : {Status::exact, Status::float_only, Status::mismatch, Status::domain_excluded, Status::pole}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown status '" + std::string(text) + "'");
}

VerificationReport compare_values(std::string identity, ParamList params, const GammaPolynomial& lhs,
                                  const GammaPolynomial& rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  const double lf = lhs.to_float();
  const double rf = rhs.to_float();
  r.lhs_float = lf;
  r.rhs_float = rf;
  r.abs_float_gap = std::fabs(lf - rf);
  const GammaPolynomial diff = lhs - rhs;
  if (diff.is_zero()) {
    r.status = Status::exact;
  } else {
    const double gap = std::fabs(diff.to_float());
    const double scale = 1.0 + std::max(std::fabs(lf), std::fabs(rf));
    r.status = gap <= kFloatOnlyTolerance * scale ? Status::float_only : Status::mismatch;
  }
  return r;
}

VerificationReport excluded(std::string identity, ParamList params, std::string detail, std::string lhs,
                            std::string rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.status = Status::domain_excluded;
  r.detail = std::move(detail);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value.str();
  nlohmann::ordered_json doc;
  doc["identity"] = report.identity;
  doc["params"] = std::move(params);
  doc["status"] = std::string(to_string(report.status));
  doc["lhs"] = report.lhs;
  doc["rhs"] = report.rhs;
  doc["abs_float_gap"] = report.abs_float_gap ? nlohmann::ordered_json(*report.abs_float_gap) : nullptr;
  if (!report.detail.empty()) doc["detail"] = report.detail;
  return doc;
}

VerificationReport report_from_json(const nlohmann::ordered_json& doc) {
  try {
    VerificationReport r;
    r.identity = doc.at("identity").get<std::string>();
    for (const auto& [name, value] : doc.at("params").items()) {
      r.params.emplace_back(name, Rational::parse(value.get<std::string>()));
    }
    r.status = status_from_string(doc.at("status").get<std::string>());
    r.lhs = doc.at("lhs").get<std::string>();
    r.rhs = doc.at("rhs").get<std::string>();
    if (doc.contains("abs_float_gap") && !doc["abs_float_gap"].is_null()) {
      r.abs_float_gap = doc["abs_float_gap"].get<double>();
    }
    if (doc.contains("detail")) r.detail = doc["detail"].get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace dfc
