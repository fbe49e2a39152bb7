#include "dfc/special.hpp"

#include "dfc/error.hpp"

namespace dfc {

SpecialValue SpecialValue::finite(GammaMonomial value) {
  if (value.is_zero()) return zero();
  return SpecialValue(Kind::finite, std::move(value));
}

const GammaMonomial& SpecialValue::monomial() const {
  if (kind_ != Kind::finite) throw SpecialValuePole("special value is " + str() + ", not finite");
  return value_;
}

GammaPolynomial SpecialValue::to_polynomial() const {
  switch (kind_) {
    case Kind::finite: return GammaPolynomial(value_);
    case Kind::zero: return {};
    case Kind::pole: break;
  }
  throw SpecialValuePole("special value is a pole");
}

std::string SpecialValue::str() const {
  switch (kind_) {
    case Kind::finite: return value_.str();
    case Kind::zero: return "0";
    case Kind::pole: break;
  }
  return "pole";
}

Rational poch_int(const Rational& x, unsigned long k) {
  Rational out(1);
  Rational factor = x;
  for (unsigned long j = 0; j < k; ++j) {
    out *= factor;
    if (out.is_zero()) break;
    factor += Rational(1);
  }
  return out;
}

Rational falling_int(const Rational& x, unsigned long k) {
  Rational out(1);
  Rational factor = x;
  for (unsigned long j = 0; j < k; ++j) {
    out *= factor;
    if (out.is_zero()) break;
    factor -= Rational(1);
  }
  return out;
}

Rational gen_binomial(const Rational& alpha, unsigned long n) { return falling_int(alpha, n) / factorial(n); }

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(mpq_class(out));
}

namespace {

unsigned long as_count(const Rational& y) {
  const auto v = y.to_long();
  if (!v) throw DomainError("integer order " + y.str() + " is too large");
  return static_cast<unsigned long>(*v);
}

}  // namespace

SpecialValue falling(const Rational& x, const Rational& y) {
  if (y.is_positive_integer()) return SpecialValue::finite(GammaMonomial(falling_int(x, as_count(y))));
  if (y.is_zero()) return SpecialValue::finite(GammaMonomial(Rational(1)));
  const Rational x_minus_y = x - y;
  if (!x.is_negative_integer()) {
    if (x_minus_y.is_negative_integer()) return SpecialValue::zero();
    return SpecialValue::finite(gamma_of(x + Rational(1)) / gamma_of(x_minus_y + Rational(1)));
  }
  return SpecialValue::pole();
}

SpecialValue pochhammer(const Rational& x, const Rational& y) {
  if (y.is_positive_integer()) return SpecialValue::finite(GammaMonomial(poch_int(x, as_count(y))));
  if (y.is_zero()) return SpecialValue::finite(GammaMonomial(Rational(1)));
  const Rational x_plus_y = x + y;
  if (x_plus_y.is_nonpositive_integer()) {
    return SpecialValue::pole();
  }
  if (x.is_nonpositive_integer()) return SpecialValue::zero();
  return SpecialValue::finite(gamma_of(x_plus_y) / gamma_of(x));
}

namespace {

// Shared comparison for checks whose sides are SpecialValues: matching Zero
// or finite values compare formally, matching poles report Status::pole.
VerificationReport compare_special(std::string name, ParamList params, const SpecialValue& lhs,
                                   const SpecialValue& rhs) {
  if (lhs.is_pole() || rhs.is_pole()) {
    VerificationReport r;
    r.identity = std::move(name);
    r.params = std::move(params);
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.status = lhs.is_pole() && rhs.is_pole() ? Status::pole : Status::mismatch;
    return r;
  }
  return compare_values(std::move(name), std::move(params), lhs.to_polynomial(), rhs.to_polynomial());
}

}  // namespace

VerificationReport falling_poch_bridge_check(const Rational& t, const Rational& alpha) {
  const SpecialValue lhs = falling(t + alpha - Rational(1), alpha);
  const SpecialValue rhs = pochhammer(t, alpha);
  return compare_special("falling-poch-bridge", {{"t", t}, {"alpha", alpha}}, lhs, rhs);
}

VerificationReport index_law_check(const Rational& t, const Rational& alpha, const Rational& beta) {
  ParamList params{{"t", t}, {"alpha", alpha}, {"beta", beta}};
  const SpecialValue whole = falling(t, alpha + beta);
  const SpecialValue shifted = falling(t - beta, alpha);
  const SpecialValue part = falling(t, beta);
  for (const auto& [label, v] : {std::pair{"t^(alpha+beta)", &whole}, std::pair{"(t-beta)^(alpha)", &shifted},
                                 std::pair{"t^(beta)", &part}}) {
    if (!v->is_finite()) {
      return excluded("index-law", std::move(params), std::string(label) + " is " + v->str());
    }
  }
  return compare_values("index-law", std::move(params), GammaPolynomial(whole.monomial()),
                        GammaPolynomial(shifted.monomial() * part.monomial()));
}

}  // namespace dfc
