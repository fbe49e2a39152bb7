#include <string>

#include "dfc/error.hpp"
#include "dfc/identities.hpp"
#include "dfc/special.hpp"

namespace dfc {

GammaPolynomial power_rule_closed(const Rational& /*a*/, const Rational& mu, const FracOrder& nu, unsigned N) {
  if (mu.is_negative_integer()) throw DomainError("mu must not be a negative integer");
  const GammaMonomial scale = gamma_of(mu + Rational(1));
  return GammaPolynomial(scale) * (poch_int(mu + nu.value() + Rational(1), N) / factorial(N));
}

GammaPolynomial corollary_closed(const Rational& /*a*/, const Rational& mu, const FracOrder& nu, unsigned N) {
  if (mu.is_negative_integer()) throw DomainError("mu must not be a negative integer");
  const Rational order = mu + nu.value();
  // t - a = mu + nu + N
  const Rational t_minus_a = order + Rational(N);
  if (order.is_negative_integer()) {
    if (t_minus_a.sign() < 0) throw DomainError("zero form requires t on the grid at a");
    return {};
  }
  const GammaMonomial ratio = gamma_of(mu + Rational(1)) / gamma_of(order + Rational(1));
  return GammaPolynomial(ratio) * falling(t_minus_a, order).to_polynomial();
}

namespace {

ParamList point_params(const Rational& a, const Rational& mu, const Rational& nu, unsigned N) {
  return {{"a", a}, {"mu", mu}, {"nu", nu}, {"n", Rational(N)}};
}

// Shared dual-path driver: one frac_sum_diff pass, then per-index closed form.
template <typename Closed>
std::vector<VerificationReport> verify_sampled_power(const char* name, const Rational& a, const Rational& mu,
                                                     const Rational& nu, unsigned n_max, Closed closed) {
  if (mu.is_negative_integer()) {
    return {excluded(name, point_params(a, mu, nu, 0), "mu must not be a negative integer")};
  }
  if (nu.is_nonpositive_integer()) {
    return {excluded(name, point_params(a, mu, nu, 0), "nu must not be a nonpositive integer")};
  }
  const FracOrder order(nu);
  const GridFunction sampled = sample_falling_power(a, mu, n_max + 1);
  const GridFunction summed = frac_sum_diff(sampled, order);
  std::vector<VerificationReport> reports;
  reports.reserve(n_max + 1);
  for (unsigned N = 0; N <= n_max; ++N) {
    try {
      reports.push_back(compare_values(name, point_params(a, mu, nu, N), summed[N], closed(order, N)));
    } catch (const DomainError& e) {
      reports.push_back(excluded(name, point_params(a, mu, nu, N), e.what(), summed[N].str()));
    }
  }
  return reports;
}

}  // namespace

std::vector<VerificationReport> power_rule_verify(const Rational& a, const Rational& mu, const Rational& nu,
                                                  unsigned n_max) {
  return verify_sampled_power("power-rule", a, mu, nu, n_max, [&](const FracOrder& order, unsigned N) {
    return power_rule_closed(a, mu, order, N);
  });
}

std::vector<VerificationReport> corollary_verify(const Rational& a, const Rational& mu, const Rational& nu,
                                                 unsigned n_max) {
  return verify_sampled_power("power-ratio", a, mu, nu, n_max, [&](const FracOrder& order, unsigned N) {
    return corollary_closed(a, mu, order, N);
  });
}

VerificationReport nabla_zero_check(const Rational& a, const Rational& p, const Rational& alpha,
                                    std::size_t t_index) {
  ParamList params{{"a", a}, {"p", p}, {"alpha", alpha}, {"t-index", Rational(static_cast<long>(t_index))}};
  const Rational m = alpha - p;
  if (!m.is_positive_integer()) return excluded("nabla-zero", std::move(params), "alpha-p must be a positive integer");
  if (alpha.is_integer()) return excluded("nabla-zero", std::move(params), "alpha must not be an integer");
  if (t_index < 1) return excluded("nabla-zero", std::move(params), "t-index must be at least 1");
  GammaPolynomial value;
  try {
    value = nabla_poch_diff(a, p, alpha, t_index);
  } catch (const SpecialValuePole& e) {
    VerificationReport r = excluded("nabla-zero", std::move(params), e.what(), "pole", "0");
    r.status = Status::pole;
    return r;
  }
  if (Rational(static_cast<long>(t_index)) < Rational(1) + m) {
    return excluded("nabla-zero", std::move(params), "t-index must be at least 1+m (boundary value attached)",
                    value.str(), "0");
  }
  return compare_values("nabla-zero", std::move(params), value, Rational(0));
}

}  // namespace dfc
