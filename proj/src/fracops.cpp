#include "dfc/fracops.hpp"

#include <string>

#include "dfc/error.hpp"
#include "dfc/special.hpp"

namespace dfc {

FracOrder::FracOrder(Rational nu) : nu_(std::move(nu)) {
  if (nu_.is_nonpositive_integer()) throw DomainError("nu must not be a nonpositive integer");
}

std::vector<Rational> kernel_weights(const FracOrder& nu, std::size_t count) {
  std::vector<Rational> w;
  w.reserve(count);
  Rational current(1);
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) {
      const Rational jj(static_cast<long>(j));
      current *= (nu.value() + jj - Rational(1)) / jj;
    }
    w.push_back(current);
  }
  return w;
}

GridFunction frac_sum_diff(const GridFunction& f, const FracOrder& nu) {
  const std::vector<Rational> w = kernel_weights(nu, f.size());
  std::vector<GammaPolynomial> out;
  out.reserve(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    GammaPolynomial acc;
    for (std::size_t i = 0; i <= n; ++i) acc += w[n - i] * f[i];
    out.push_back(std::move(acc));
  }
  return GridFunction(f.origin() + nu.value(), std::move(out));
}

GridFunction mr_frac_diff(const GridFunction& f, const Rational& mu) {
  if (mu <= Rational(0) || mu >= Rational(1)) {
    throw DomainError("mu must lie strictly between 0 and 1, got " + mu.str());
  }
  return frac_sum_diff(f, FracOrder(-mu));
}

GridFunction ae_frac_diff(const GridFunction& f, const Rational& mu) {
  if (mu.sign() <= 0 || mu.is_integer()) {
    throw DomainError("mu must be a positive non-integer, got " + mu.str());
  }
  const auto n = mu.ceil().get_si();
  if (f.size() < static_cast<std::size_t>(n) + 1) {
    throw WindowTooShort("Atici-Eloe difference of order " + mu.str() + " needs at least " +
                         std::to_string(n + 1) + " samples");
  }
  const GridFunction partial = frac_sum_diff(f, FracOrder(Rational(n) - mu));
  return delta_n(partial, static_cast<std::size_t>(n));
}

GammaPolynomial nabla_poch_diff(const Rational& /*a*/, const Rational& p, const Rational& alpha,
                                std::size_t t_index) {
  // The origin a only shifts the grid: t - j + 1 and j - a depend on indices.
  if (alpha.is_integer()) throw DomainError("alpha must not be an integer");
  if (t_index < 1) throw DomainError("t_index must be at least 1");
  const Rational kernel_order = -alpha - Rational(1);
  GammaPolynomial sum;
  for (std::size_t j = 1; j <= t_index; ++j) {
    const SpecialValue kernel = pochhammer(Rational(static_cast<long>(t_index - j + 1)), kernel_order);
    const SpecialValue power = pochhammer(Rational(static_cast<long>(j)), p);
    if (kernel.is_pole() || power.is_pole()) {
      throw SpecialValuePole("summand j=" + std::to_string(j) + " of the nabla sum is a pole");
    }
    if (kernel.is_zero() || power.is_zero()) continue;
    sum += GammaPolynomial(kernel.monomial() * power.monomial());
  }
  return sum * GammaPolynomial(gamma_of(-alpha).inverse());
}

}  // namespace dfc
