#include "dfc/rational.hpp"

#include <cctype>
#include <climits>

#include "dfc/error.hpp"

namespace dfc {

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const noexcept { return value_.get_den() == 1; }

bool Rational::is_positive_integer() const noexcept { return is_integer() && sgn(value_) > 0; }

bool Rational::is_nonpositive_integer() const noexcept { return is_integer() && sgn(value_) <= 0; }

bool Rational::is_negative_integer() const noexcept { return is_integer() && sgn(value_) < 0; }

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return Rational(value_ - mpq_class(floor())); }

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

double Rational::to_double() const { return value_.get_d(); }

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division of " + str() + " by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

}  // namespace dfc
