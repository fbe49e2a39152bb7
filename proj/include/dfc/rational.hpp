#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace dfc {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "-5/2", "3", "1/3". No whitespace, no '+' sign, denominator > 0.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }
  bool is_integer() const noexcept;
  // N_1 = {1, 2, ...}
  bool is_positive_integer() const noexcept;
  // N^0 = {..., -1, 0}
  bool is_nonpositive_integer() const noexcept;
  // N^{-1} = {..., -2, -1}
  bool is_negative_integer() const noexcept;

  /// Largest integer <= *this.
  mpz_class floor() const;
  /// Smallest integer >= *this.
  mpz_class ceil() const;
  /// Fractional part in [0, 1).
  Rational frac() const;

  /// Integer value if it is an integer that fits in a long.
  std::optional<long> to_long() const;
  double to_double() const;
  std::string str() const;

  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

Rational factorial(unsigned long n);

}  // namespace dfc
