#pragma once

#include <map>
#include <string>
#include <string_view>

#include "dfc/rational.hpp"

namespace dfc {

/// Map from a Gamma base b in (0,1) to its nonzero integer exponent. Distinct
/// bases are treated as algebraically independent symbols.
using GammaFactors = std::map<Rational, int>;

/// Exact value coeff * prod Gamma(b)^e with every base strictly inside (0,1).
/// Gamma at positive integers never appears as a factor: it is folded into
/// the coefficient. A zero coefficient forces an empty factor map.
class GammaMonomial {
 public:
  GammaMonomial() = default;
  GammaMonomial(Rational coeff);  // NOLINT(google-explicit-constructor)
  GammaMonomial(Rational coeff, GammaFactors factors);

  const Rational& coeff() const noexcept { return coeff_; }
  const GammaFactors& factors() const noexcept { return factors_; }
  bool is_zero() const noexcept { return coeff_.is_zero(); }
  bool is_rational() const noexcept { return factors_.empty(); }

  GammaMonomial inverse() const;
  double to_float() const;
  std::string str() const;

  friend GammaMonomial operator*(const GammaMonomial& lhs, const GammaMonomial& rhs);
  friend GammaMonomial operator/(const GammaMonomial& lhs, const GammaMonomial& rhs);
  friend bool operator==(const GammaMonomial&, const GammaMonomial&) = default;

 private:
  void canonicalize();

  Rational coeff_{0};
  GammaFactors factors_;
};

/// Gamma(x) as a canonical monomial, reducing x into (0,1) with
/// Gamma(x+1) = x Gamma(x). Throws GammaPole for integers <= 0.
GammaMonomial gamma_of(const Rational& x);

/// Finite formal sum of Gamma monomials, keyed by factor signature.
class GammaPolynomial {
 public:
  using Terms = std::map<GammaFactors, Rational>;

  GammaPolynomial() = default;
  GammaPolynomial(const Rational& value);        // NOLINT(google-explicit-constructor)
  GammaPolynomial(const GammaMonomial& monomial);  // NOLINT(google-explicit-constructor)

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Deterministic sum over terms in signature order.
  double to_float() const;

  /// Canonical text form, e.g. "1 + -1/2*G(1/3)^1*G(1/2)^-1". Zero renders "0".
  std::string str() const;
  /// Inverse of str(); throws ParseError on malformed text.
  static GammaPolynomial parse(std::string_view text);

  GammaPolynomial& operator+=(const GammaPolynomial& rhs);
  GammaPolynomial& operator-=(const GammaPolynomial& rhs);
  GammaPolynomial& operator*=(const GammaPolynomial& rhs);
  GammaPolynomial& operator*=(const Rational& scalar);

  friend GammaPolynomial operator+(GammaPolynomial lhs, const GammaPolynomial& rhs) { return lhs += rhs; }
  friend GammaPolynomial operator-(GammaPolynomial lhs, const GammaPolynomial& rhs) { return lhs -= rhs; }
  friend GammaPolynomial operator*(GammaPolynomial lhs, const GammaPolynomial& rhs) { return lhs *= rhs; }
  friend GammaPolynomial operator*(GammaPolynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend GammaPolynomial operator*(const Rational& lhs, GammaPolynomial rhs) { return rhs *= lhs; }
  GammaPolynomial operator-() const;

  friend bool operator==(const GammaPolynomial&, const GammaPolynomial&) = default;

 private:
  void add_term(const GammaFactors& signature, const Rational& coeff);

  Terms terms_;
};

/// Numeric Gamma on (0,1) via log-Gamma; relative error well under 1e-12.
double gamma_float(const Rational& base);

}  // namespace dfc
