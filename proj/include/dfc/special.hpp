#pragma once

#include <string>

#include "dfc/gamma.hpp"
#include "dfc/rational.hpp"
#include "dfc/report.hpp"

namespace dfc {

/// Result of a generalized factorial: a finite nonzero monomial, an exact
/// zero, or an unresolved pole.
class SpecialValue {
 public:
  enum class Kind { finite, zero, pole };

  /// A zero monomial collapses to Kind::zero.
  static SpecialValue finite(GammaMonomial value);
  static SpecialValue zero() { return SpecialValue(Kind::zero, {}); }
  static SpecialValue pole() { return SpecialValue(Kind::pole, {}); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  bool is_pole() const noexcept { return kind_ == Kind::pole; }

  /// Throws SpecialValuePole unless finite.
  const GammaMonomial& monomial() const;
  /// Zero maps to the zero polynomial; Pole throws SpecialValuePole.
  GammaPolynomial to_polynomial() const;
  /// Canonical monomial string, "0", or "pole".
  std::string str() const;

  friend bool operator==(const SpecialValue&, const SpecialValue&) = default;

 private:
  SpecialValue(Kind kind, GammaMonomial value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  GammaMonomial value_;
};

/// Generalized falling factorial x^(y), four-case definition; the case left
/// open (x a negative integer, x-y not, y not in {0,1,2,...}) is Pole.
SpecialValue falling(const Rational& x, const Rational& y);

/// Pochhammer symbol (x)_y, four-case definition; leftover case is Pole.
SpecialValue pochhammer(const Rational& x, const Rational& y);

/// x (x+1) ... (x+k-1); 1 for k = 0.
Rational poch_int(const Rational& x, unsigned long k);

/// x (x-1) ... (x-k+1); 1 for k = 0.
Rational falling_int(const Rational& x, unsigned long k);

/// binom(alpha, n) = falling_int(alpha, n) / n!.
Rational gen_binomial(const Rational& alpha, unsigned long n);

/// Ordinary binomial coefficient for 0 <= k <= n.
Rational binomial(unsigned long n, unsigned long k);

/// (t+alpha-1)^(alpha) against (t)_alpha.
VerificationReport falling_poch_bridge_check(const Rational& t, const Rational& alpha);

/// t^(alpha+beta) against (t-beta)^(alpha) * t^(beta); domain_excluded
/// whenever one of the three values is not finite.
VerificationReport index_law_check(const Rational& t, const Rational& alpha, const Rational& beta);

}  // namespace dfc
