#include "dfc/identities.hpp"
#include "dfc/special.hpp"

namespace dfc {

VerificationReport binom_falling_check(const Rational& x, const Rational& y, unsigned n) {
  const Rational lhs = falling_int(x + y, n);
  Rational rhs(0);
  for (unsigned k = 0; k <= n; ++k) {
    rhs += binomial(n, k) * falling_int(x, n - k) * falling_int(y, k);
  }
  return compare_values("binom-falling", {{"x", x}, {"y", y}, {"n", Rational(n)}}, lhs, rhs);
}

VerificationReport binom_poch_check(const Rational& x, const Rational& y, unsigned n) {
  const Rational lhs = poch_int(x + y, n);
  Rational rhs(0);
  for (unsigned k = 0; k <= n; ++k) {
    rhs += binomial(n, k) * poch_int(x, n - k) * poch_int(y, k);
  }
  return compare_values("binom-poch", {{"x", x}, {"y", y}, {"n", Rational(n)}}, lhs, rhs);
}

VerificationReport gamma_sum_check(const Rational& mu, const Rational& nu, unsigned n) {
  ParamList params{{"mu", mu}, {"nu", nu}, {"n", Rational(n)}};
  const Rational order = mu + nu;
  if (!order.is_negative_integer()) {
    return excluded("gamma-sum", std::move(params), "mu+nu must be a negative integer");
  }
  if (mu.is_negative_integer()) return excluded("gamma-sum", std::move(params), "mu must not be a negative integer");
  if (nu.is_nonpositive_integer()) {
    return excluded("gamma-sum", std::move(params), "nu must not be a nonpositive integer");
  }
  if (Rational(n) < -order) return excluded("gamma-sum", std::move(params), "n must be at least -(mu+nu)");
  Rational sum(0);
  const Rational shifted = mu + Rational(1);
  for (unsigned k = 0; k <= n; ++k) {
    sum += binomial(n, k) * poch_int(nu, n - k) * poch_int(shifted, k);
  }
  return compare_values("gamma-sum", std::move(params), sum, Rational(0));
}

}  // namespace dfc
