#include "dfc/gamma.hpp"

#include <cmath>
#include <vector>

#include "dfc/error.hpp"

namespace dfc {

namespace {

GammaFactors merge_factors(const GammaFactors& lhs, const GammaFactors& rhs, int rhs_sign) {
  GammaFactors out = lhs;
  for (const auto& [base, exp] : rhs) {
    const int e = (out[base] += rhs_sign * exp);
    if (e == 0) out.erase(base);
  }
  return out;
}

// log|q| without overflowing a double for big numerators/denominators.
double log_abs(const mpz_class& z) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double evaluate(const Rational& coeff, const GammaFactors& factors) {
  if (coeff.is_zero()) return 0.0;
  if (factors.empty()) return coeff.to_double();
  double log_mag = log_abs(coeff.numerator()) - log_abs(coeff.denominator());
  for (const auto& [base, exp] : factors) {
    log_mag += exp * std::lgamma(base.to_double());
  }
  return coeff.sign() * std::exp(log_mag);
}

std::string render_term(const Rational& coeff, const GammaFactors& factors) {
  std::string out = coeff.str();
  for (const auto& [base, exp] : factors) {
    out += "*G(" + base.str() + ")^" + std::to_string(exp);
  }
  return out;
}

}  // namespace

GammaMonomial::GammaMonomial(Rational coeff) : coeff_(std::move(coeff)) {}

GammaMonomial::GammaMonomial(Rational coeff, GammaFactors factors)
    : coeff_(std::move(coeff)), factors_(std::move(factors)) {
  canonicalize();
}

void GammaMonomial::canonicalize() {
  if (coeff_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    const Rational& base = it->first;
    if (base <= Rational(0) || base >= Rational(1)) {
      throw DomainError("Gamma base " + base.str() + " outside (0,1)");
    }
    it = it->second == 0 ? factors_.erase(it) : std::next(it);
  }
}

GammaMonomial GammaMonomial::inverse() const {
  if (coeff_.is_zero()) throw DivisionByZero("inverse of zero Gamma monomial");
  GammaFactors inv;
  for (const auto& [base, exp] : factors_) inv.emplace(base, -exp);
  return GammaMonomial(Rational(1) / coeff_, std::move(inv));
}

double GammaMonomial::to_float() const { return evaluate(coeff_, factors_); }

std::string GammaMonomial::str() const { return is_zero() ? "0" : render_term(coeff_, factors_); }

GammaMonomial operator*(const GammaMonomial& lhs, const GammaMonomial& rhs) {
  const Rational coeff = lhs.coeff_ * rhs.coeff_;
  if (coeff.is_zero()) return GammaMonomial();
  return GammaMonomial(coeff, merge_factors(lhs.factors_, rhs.factors_, +1));
}

GammaMonomial operator/(const GammaMonomial& lhs, const GammaMonomial& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero Gamma monomial");
  const Rational coeff = lhs.coeff_ / rhs.coeff_;
  if (coeff.is_zero()) return GammaMonomial();
  return GammaMonomial(coeff, merge_factors(lhs.factors_, rhs.factors_, -1));
}

GammaMonomial gamma_of(const Rational& x) {
  if (x.is_nonpositive_integer()) throw GammaPole("Gamma has a pole at " + x.str());
  if (x.is_integer()) {
    return GammaMonomial(factorial(x.to_long().value() - 1));
  }
  const Rational base = x.frac();
  Rational coeff(1);
  if (x > base) {
    // Gamma(x) = (x-1)(x-2)...(base) Gamma(base)
    for (Rational k = base; k < x; k += Rational(1)) coeff *= k;
  } else {
    // Gamma(base) = x (x+1) ... (base-1) Gamma(x)
    for (Rational k = x; k < base; k += Rational(1)) coeff /= k;
  }
  return GammaMonomial(coeff, GammaFactors{{base, 1}});
}

double gamma_float(const Rational& base) { return std::exp(std::lgamma(base.to_double())); }

GammaPolynomial::GammaPolynomial(const Rational& value) {
  if (!value.is_zero()) terms_.emplace(GammaFactors{}, value);
}

GammaPolynomial::GammaPolynomial(const GammaMonomial& monomial) {
  if (!monomial.is_zero()) terms_.emplace(monomial.factors(), monomial.coeff());
}

void GammaPolynomial::add_term(const GammaFactors& signature, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(signature, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& rhs) {
  for (const auto& [sig, coeff] : rhs.terms_) add_term(sig, coeff);
  return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& rhs) {
  for (const auto& [sig, coeff] : rhs.terms_) add_term(sig, -coeff);
  return *this;
}

GammaPolynomial& GammaPolynomial::operator*=(const GammaPolynomial& rhs) {
  GammaPolynomial out;
  for (const auto& [lsig, lcoeff] : terms_) {
    for (const auto& [rsig, rcoeff] : rhs.terms_) {
      out.add_term(merge_factors(lsig, rsig, +1), lcoeff * rcoeff);
    }
  }
  *this = std::move(out);
  return *this;
}

GammaPolynomial& GammaPolynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [sig, coeff] : terms_) coeff *= scalar;
  return *this;
}

GammaPolynomial GammaPolynomial::operator-() const {
  GammaPolynomial out = *this;
  for (auto& [sig, coeff] : out.terms_) coeff = -coeff;
  return out;
}

double GammaPolynomial::to_float() const {
  double sum = 0.0;
  for (const auto& [sig, coeff] : terms_) sum += evaluate(coeff, sig);
  return sum;
}

std::string GammaPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [sig, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += render_term(coeff, sig);
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return parts;
}

GammaMonomial parse_term(std::string_view term) {
  const auto pieces = split(term, "*");
  const Rational coeff = Rational::parse(pieces.front());
  if (coeff.is_zero()) throw ParseError("zero coefficient in term '" + std::string(term) + "'");
  GammaFactors factors;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const std::string_view f = pieces[i];
    const auto close = f.find(")^");
    if (!f.starts_with("G(") || close == std::string_view::npos) {
      throw ParseError("malformed Gamma factor '" + std::string(f) + "'");
    }
    const Rational base = Rational::parse(f.substr(2, close - 2));
    const Rational exp = Rational::parse(f.substr(close + 2));
    const auto e = exp.to_long();
    if (!e || *e == 0 || base <= Rational(0) || base >= Rational(1) || factors.contains(base)) {
      throw ParseError("non-canonical Gamma factor '" + std::string(f) + "'");
    }
    factors.emplace(base, static_cast<int>(*e));
  }
  return GammaMonomial(coeff, std::move(factors));
}

}  // namespace

GammaPolynomial GammaPolynomial::parse(std::string_view text) {
  if (text == "0") return {};
  GammaPolynomial out;
  for (const auto term : split(text, " + ")) out += GammaPolynomial(parse_term(term));
  return out;
}

}  // namespace dfc
