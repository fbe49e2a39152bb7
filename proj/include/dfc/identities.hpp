#pragma once

#include <cstddef>
#include <vector>

#include "dfc/fracops.hpp"
#include "dfc/gamma.hpp"
#include "dfc/gridfn.hpp"
#include "dfc/rational.hpp"
#include "dfc/report.hpp"

// Closed forms and exact verifiers for the discrete fractional calculus
// identities. Verifiers never throw for out-of-domain parameters: they return
// a domain_excluded report naming the violated precondition. Closed-form
// evaluators throw DomainError instead.
namespace dfc {

// Falling-factorial binomial theorem:
//   (x+y)^(n) = sum_k C(n,k) x^(n-k) y^(k)
VerificationReport binom_falling_check(const Rational& x, const Rational& y, unsigned n);

// Rising-factorial analogue: (x+y)_n = sum_k C(n,k) (x)_{n-k} (y)_k
VerificationReport binom_poch_check(const Rational& x, const Rational& y, unsigned n);

/// Power rule right-hand side at t = a + mu + nu + N:
///   Gamma(mu+1) (mu+nu+1)_N / N!
GammaPolynomial power_rule_closed(const Rational& a, const Rational& mu, const FracOrder& nu, unsigned N);

/// Applies frac_sum_diff to sampled (s-a)^(mu) and compares every output
/// index N <= n_max against power_rule_closed.
std::vector<VerificationReport> power_rule_verify(const Rational& a, const Rational& mu, const Rational& nu,
                                                  unsigned n_max);

/// Gamma-ratio form: Gamma(mu+1)/Gamma(mu+nu+1) (t-a)^(mu+nu) when mu+nu is
/// not a negative integer; zero for t on the grid at a otherwise. Throws
/// DomainError off those domains.
GammaPolynomial corollary_closed(const Rational& a, const Rational& mu, const FracOrder& nu, unsigned N);

/// frac_sum_diff of sampled (s-a)^(mu) against corollary_closed for N <= n_max.
std::vector<VerificationReport> corollary_verify(const Rational& a, const Rational& mu, const Rational& nu,
                                                 unsigned n_max);

/// sum_k C(n,k) (nu)_{n-k} (mu+1)_k = 0 for mu+nu a negative integer and
/// n >= -(mu+nu).
VerificationReport gamma_sum_check(const Rational& mu, const Rational& nu, unsigned n);

/// Corrected nabla vanishing: nabla_poch_diff is zero when alpha - p = m >= 1
/// and t_index >= 1 + m. Below that bound the report is domain_excluded
/// and carries the boundary value as lhs.
VerificationReport nabla_zero_check(const Rational& a, const Rational& p, const Rational& alpha,
                                    std::size_t t_index);

/// sum_{n=0}^{k} (-1)^n C(k,n) Delta^n g(t-alpha-n) = g(t-alpha-k) at
/// t = a + alpha + k + t_index. Throws WindowTooShort when g is too short.
VerificationReport alt_sum_lemma_check(const GridFunction& g, const Rational& alpha, unsigned k,
                                       std::size_t t_index);

/// Fractional Leibniz rule at t = a + alpha + t_index:
///   D^{-alpha}[fg](t) = sum_n C(-alpha,n) D^{-(alpha+n)}f(t) Delta^n g(t-alpha-n)
VerificationReport leibniz_verify(const GridFunction& f, const GridFunction& g, const FracOrder& alpha,
                                  std::size_t t_index);

/// Both sides of the Leibniz consequence for (s)^(beta+gamma) at
/// t = alpha + beta + gamma + N.
VerificationReport prop_form1_check(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                    unsigned N);

/// Miller-Ross difference (frac_sum_diff with order -mu) against the
/// Atici-Eloe difference on the points the two domains share.
std::vector<VerificationReport> mr_ae_agreement(const GridFunction& f, const Rational& mu);

/// Terminating 3F2(a1, a2, -m; b1, b2; z), exact. Throws
/// DenominatorPochhammerZero naming the first k with (b1)_k or (b2)_k zero.
Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, unsigned m, const Rational& b1,
                            const Rational& b2, const Rational& z);

/// (c-a)_m (c-b)_m / ((c)_m (c-a-b)_m). Throws DivisionByZero naming the
/// vanishing factor.
Rational saalschutz_lhs(const Rational& a, const Rational& b, const Rational& c, unsigned m);

/// saalschutz_lhs against 3F2(a, b, -m; c, 1+a+b-c-m; 1). With force set,
/// the hypotheses are not enforced and evaluation failures become
/// domain_excluded reports.
VerificationReport saalschutz_verify(const Rational& a, const Rational& b, const Rational& c, unsigned m,
                                     bool force = false);

}  // namespace dfc
