#include "dfc/error.hpp"
#include "dfc/identities.hpp"
#include "dfc/special.hpp"

namespace dfc {

Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, unsigned m, const Rational& b1,
                            const Rational& b2, const Rational& z) {
  const Rational minus_m = -Rational(m);
  Rational sum(0);
  for (unsigned k = 0; k <= m; ++k) {
    const Rational den1 = poch_int(b1, k);
    if (den1.is_zero()) throw DenominatorPochhammerZero("(b1)_k", k);
    const Rational den2 = poch_int(b2, k);
    if (den2.is_zero()) throw DenominatorPochhammerZero("(b2)_k", k);
    Rational zk(1);
    for (unsigned j = 0; j < k; ++j) zk *= z;
    sum += poch_int(a1, k) * poch_int(a2, k) * poch_int(minus_m, k) * zk / (den1 * den2 * factorial(k));
  }
  return sum;
}

Rational saalschutz_lhs(const Rational& a, const Rational& b, const Rational& c, unsigned m) {
  const Rational cm = poch_int(c, m);
  if (cm.is_zero()) throw DivisionByZero("(c)_m vanishes");
  const Rational cabm = poch_int(c - a - b, m);
  if (cabm.is_zero()) throw DivisionByZero("(c-a-b)_m vanishes");
  return poch_int(c - a, m) * poch_int(c - b, m) / (cm * cabm);
}

VerificationReport saalschutz_verify(const Rational& a, const Rational& b, const Rational& c, unsigned m,
                                     bool force) {
  ParamList params{{"pa", a}, {"pb", b}, {"pc", c}, {"m", Rational(m)}};
  const Rational one(1);
  if (!force) {
    if (a.is_nonpositive_integer()) return excluded("saalschutz", std::move(params), "a must not be a nonpositive integer");
    if (c.is_nonpositive_integer()) return excluded("saalschutz", std::move(params), "c must not be a nonpositive integer");
    if ((c - a - one).is_negative_integer()) {
      return excluded("saalschutz", std::move(params), "c-a-1 must not be a negative integer");
    }
    if ((c - a - b - one).is_negative_integer()) {
      return excluded("saalschutz", std::move(params), "c-a-b-1 must not be a negative integer");
    }
  }
  try {
    const Rational lhs = saalschutz_lhs(a, b, c, m);
    const Rational rhs = hyp3f2_terminating(a, b, m, c, one + a + b - c - Rational(m), one);
    return compare_values("saalschutz", std::move(params), lhs, rhs);
  } catch (const Error& e) {
    return excluded("saalschutz", std::move(params), e.what());
  }
}

}  // namespace dfc
