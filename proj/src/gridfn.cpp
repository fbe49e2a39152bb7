#include "dfc/gridfn.hpp"

#include <algorithm>

#include "dfc/error.hpp"
#include "dfc/special.hpp"

namespace dfc {

std::optional<std::size_t> Grid::index_of(const Rational& t) const {
  const Rational offset = t - origin;
  if (!offset.is_integer() || offset.sign() < 0) return std::nullopt;
  const auto k = offset.to_long();
  if (!k) return std::nullopt;
  return static_cast<std::size_t>(*k);
}

GridFunction::GridFunction(Rational origin, std::vector<GammaPolynomial> values)
    : grid_{std::move(origin)}, values_(std::move(values)) {
  if (values_.empty()) throw DomainError("grid function window must hold at least one value");
}

const GammaPolynomial& GridFunction::at(std::size_t k) const {
  if (k >= values_.size()) {
    throw WindowTooShort("index " + std::to_string(k) + " outside window of length " +
                         std::to_string(values_.size()));
  }
  return values_[k];
}

GridFunction GridFunction::prefix(std::size_t len) const {
  if (len > values_.size()) {
    throw WindowTooShort("prefix of length " + std::to_string(len) + " from window of length " +
                         std::to_string(values_.size()));
  }
  return GridFunction(origin(), std::vector<GammaPolynomial>(values_.begin(), values_.begin() + len));
}

namespace {

void require_same_origin(const GridFunction& a, const GridFunction& b) {
  if (a.origin() != b.origin()) {
    throw DomainError("grid functions live on different grids: " + a.origin().str() + " vs " +
                      b.origin().str());
  }
}

}  // namespace

GridFunction GridFunction::pointwise_product(const GridFunction& other) const {
  require_same_origin(*this, other);
  const std::size_t n = std::min(size(), other.size());
  std::vector<GammaPolynomial> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(values_[k] * other.values_[k]);
  return GridFunction(origin(), std::move(out));
}

GridFunction GridFunction::axpy(const Rational& c, const GridFunction& other) const {
  require_same_origin(*this, other);
  const std::size_t n = std::min(size(), other.size());
  std::vector<GammaPolynomial> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(c * values_[k] + other.values_[k]);
  return GridFunction(origin(), std::move(out));
}

nlohmann::json GridFunction::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : values_) values.push_back(v.str());
  return {{"origin", origin().str()}, {"values", std::move(values)}};
}

GridFunction GridFunction::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("origin") || !doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError("grid function JSON needs \"origin\" and a \"values\" array");
  }
  std::vector<GammaPolynomial> values;
  for (const auto& v : doc["values"]) values.push_back(GammaPolynomial::parse(v.get<std::string>()));
  return GridFunction(Rational::parse(doc["origin"].get<std::string>()), std::move(values));
}

GridFunction sample_falling_power(const Rational& a, const Rational& mu, std::size_t len) {
  if (mu.is_negative_integer()) throw DomainError("mu must not be a negative integer");
  if (len == 0) throw DomainError("window length must be at least 1");
  std::vector<GammaPolynomial> values;
  values.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    values.push_back(falling(mu + Rational(static_cast<long>(i)), mu).to_polynomial());
  }
  return GridFunction(a + mu, std::move(values));
}

GridFunction sample_closure(const Rational& a, std::size_t len,
                            const std::function<GammaPolynomial(std::size_t)>& source) {
  if (len == 0) throw DomainError("window length must be at least 1");
  std::vector<GammaPolynomial> values;
  values.reserve(len);
  for (std::size_t k = 0; k < len; ++k) values.push_back(source(k));
  return GridFunction(a, std::move(values));
}

GridFunction random_rational_window(const Rational& a, std::size_t len, std::mt19937_64& rng) {
  // Raw engine output reduced by modulus keeps the stream identical across
  // standard libraries (distributions are implementation-defined).
  return sample_closure(a, len, [&rng](std::size_t) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    return GammaPolynomial(Rational(num, den));
  });
}

GridFunction delta_n(const GridFunction& f, std::size_t n) {
  if (n >= f.size()) {
    throw WindowTooShort("difference of order " + std::to_string(n) + " needs more than " +
                         std::to_string(f.size()) + " samples");
  }
  std::vector<Rational> weights;  // (-1)^(n-j) C(n, j)
  weights.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const Rational c = binomial(n, j);
    weights.push_back((n - j) % 2 == 0 ? c : -c);
  }
  std::vector<GammaPolynomial> out;
  out.reserve(f.size() - n);
  for (std::size_t k = 0; k + n < f.size(); ++k) {
    GammaPolynomial acc;
    for (std::size_t j = 0; j <= n; ++j) acc += weights[j] * f[k + j];
    out.push_back(std::move(acc));
  }
  return GridFunction(f.origin(), std::move(out));
}

}  // namespace dfc
