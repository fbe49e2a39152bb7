#include <string>

#include "dfc/error.hpp"
#include "dfc/identities.hpp"
#include "dfc/special.hpp"

namespace dfc {

VerificationReport alt_sum_lemma_check(const GridFunction& g, const Rational& alpha, unsigned k,
                                       std::size_t t_index) {
  // t - alpha - n sits at index k - n + t_index of g.
  const std::size_t needed = k + t_index + 1;
  if (g.size() < needed) {
    throw WindowTooShort("alternating-sum lemma needs " + std::to_string(needed) + " samples, window has " +
                         std::to_string(g.size()));
  }
  const GridFunction window = g.prefix(needed);
  GammaPolynomial lhs;
  for (unsigned n = 0; n <= k; ++n) {
    const Rational c = binomial(k, n);
    lhs += (n % 2 == 0 ? c : -c) * delta_n(window, n)[k - n + t_index];
  }
  ParamList params{{"alpha", alpha}, {"k", Rational(static_cast<long>(k))},
                   {"t-index", Rational(static_cast<long>(t_index))}};
  return compare_values("alt-sum", std::move(params), lhs, window[t_index]);
}

VerificationReport leibniz_verify(const GridFunction& f, const GridFunction& g, const FracOrder& alpha,
                                  std::size_t t_index) {
  if (f.origin() != g.origin()) throw DomainError("f and g must share an origin");
  const std::size_t len = t_index + 1;
  if (f.size() < len || g.size() < len) {
    throw WindowTooShort("Leibniz check at t-index " + std::to_string(t_index) + " needs " + std::to_string(len) +
                         " samples of f and g");
  }
  const GridFunction fw = f.prefix(len);
  const GridFunction gw = g.prefix(len);

  const GammaPolynomial lhs = frac_sum_diff(fw.pointwise_product(gw), alpha)[t_index];

  // t = a + alpha + t_index; D^{-(alpha+n)}f lives on the grid at a+alpha+n,
  // so t is its index t_index - n. Delta^n g at t - alpha - n is index t_index - n.
  const Rational minus_alpha = -alpha.value();
  GammaPolynomial rhs;
  for (std::size_t n = 0; n <= t_index; ++n) {
    const Rational coeff = gen_binomial(minus_alpha, n);
    if (coeff.is_zero()) continue;
    const FracOrder shifted(alpha.value() + Rational(static_cast<long>(n)));
    const GammaPolynomial sum_part = frac_sum_diff(fw, shifted)[t_index - n];
    const GammaPolynomial diff_part = delta_n(gw, n)[t_index - n];
    rhs += coeff * (sum_part * diff_part);
  }
  ParamList params{{"alpha", alpha.value()}, {"t-index", Rational(static_cast<long>(t_index))}};
  return compare_values("leibniz", std::move(params), lhs, rhs);
}

VerificationReport prop_form1_check(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                    unsigned N) {
  ParamList params{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"n", Rational(N)}};
  if (alpha.is_nonpositive_integer()) {
    return excluded("form1", std::move(params), "alpha must not be a nonpositive integer");
  }
  if (beta.is_negative_integer()) return excluded("form1", std::move(params), "beta must not be a negative integer");
  const Rational bg = beta + gamma;
  if (bg.is_negative_integer()) {
    return excluded("form1", std::move(params), "beta+gamma must not be a negative integer");
  }
  const Rational one(1);
  const GammaMonomial lhs_gamma = gamma_of(bg + one) / gamma_of(beta + one);
  const GammaPolynomial lhs = GammaPolynomial(lhs_gamma) * (poch_int(bg + alpha + one, N) / factorial(N));

  // t - alpha - n = beta + gamma + N - n
  GammaPolynomial rhs;
  const Rational minus_alpha = -alpha;
  for (unsigned n = 0; n <= N; ++n) {
    const SpecialValue tail = falling(bg + Rational(N - n), gamma - Rational(n));
    if (tail.is_pole()) {
      return excluded("form1", std::move(params),
                      "falling factor (t-alpha-n)^(gamma-n) is a pole at n=" + std::to_string(n));
    }
    const Rational coeff = gen_binomial(minus_alpha, n) * poch_int(alpha + beta + Rational(n) + one, N - n) *
                           falling_int(gamma, n) / factorial(N - n);
    rhs += coeff * tail.to_polynomial();
  }
  return compare_values("form1", std::move(params), lhs, rhs);
}

std::vector<VerificationReport> mr_ae_agreement(const GridFunction& f, const Rational& mu) {
  if (mu.sign() <= 0 || mu.is_integer()) throw DomainError("mu must be a positive non-integer");
  const auto n = static_cast<std::size_t>(mu.ceil().get_si());
  const GridFunction mr = mu < Rational(1) ? mr_frac_diff(f, mu) : frac_sum_diff(f, FracOrder(-mu));
  const GridFunction ae = ae_frac_diff(f, mu);
  std::vector<VerificationReport> reports;
  reports.reserve(ae.size());
  for (std::size_t k = 0; k < ae.size(); ++k) {
    const Rational t = ae.point(k);
    const auto mr_index = mr.grid().index_of(t);
    if (!mr_index || *mr_index != k + n) throw DomainError("Atici-Eloe grid is not a tail of the Miller-Ross grid");
    reports.push_back(compare_values("mr-ae", {{"mu", mu}, {"t", t}}, mr[*mr_index], ae[k]));
  }
  return reports;
}

}  // namespace dfc
