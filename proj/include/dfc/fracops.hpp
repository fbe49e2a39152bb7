#pragma once

#include <cstddef>
#include <vector>

#include "dfc/gamma.hpp"
#include "dfc/gridfn.hpp"
#include "dfc/rational.hpp"

namespace dfc {

/// Order of a fractional sum-difference. Never a nonpositive integer.
class FracOrder {
 public:
  /// Throws DomainError("nu must not be a nonpositive integer").
  explicit FracOrder(Rational nu);

  const Rational& value() const noexcept { return nu_; }

 private:
  Rational nu_;
};

/// Kernel weights w_j = (nu)_j / j! for j < count, from the recurrence
/// w_0 = 1, w_j = w_{j-1} (nu + j - 1) / j.
std::vector<Rational> kernel_weights(const FracOrder& nu, std::size_t count);

/// Miller-Ross sum-difference of order nu. Input on the grid at a, output on
/// the grid at a + nu with the same length:
///   out[N] = sum_{i=0}^{N} w_{N-i} f[i].
GridFunction frac_sum_diff(const GridFunction& f, const FracOrder& nu);

/// Miller-Ross difference of order 0 < mu < 1, output on the grid at a - mu.
GridFunction mr_frac_diff(const GridFunction& f, const Rational& mu);

/// Atici-Eloe difference: n-th forward difference of the (n - mu) sum, with
/// n = ceil(mu). Output on the grid at a + n - mu, length shrinks by n.
GridFunction ae_frac_diff(const GridFunction& f, const Rational& mu);

/// Nabla operator with Pochhammer kernel applied to (s - a)_p at
/// t = a + t_index:
///   Gamma(-alpha)^{-1} sum_{j=1}^{t_index} (t_index - j + 1)_{-alpha-1} (j)_p.
/// Throws SpecialValuePole if any summand is a pole.
GammaPolynomial nabla_poch_diff(const Rational& a, const Rational& p, const Rational& alpha,
                                std::size_t t_index);

}  // namespace dfc
