// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/sweep.hpp"
#include "dfc/error.hpp"
#include "dfc/identities.hpp"
#include "dfc/special.hpp"

using namespace dfc;

namespace {

constexpr std::uint64_t kSeed = 20240101;

Rational R(const char* text) { return Rational::parse(text); }

// Every exact report produced by the criteria, for the float cross-check.
std::vector<VerificationReport> g_exact;

struct Outcome {
  bool ok = true;
  std::string note;
};

// Tallies reports and remembers the first offending one.
struct Tally {
  std::size_t exact = 0, excluded = 0, bad = 0;
  std::string first_bad;

  void add(const VerificationReport& r, const std::function<bool(const VerificationReport&)>& acceptable) {
    if (r.status == Status::exact) {
      ++exact;
      g_exact.push_back(r);
    } else if (r.status == Status::domain_excluded) {
      ++excluded;
    }
    if (!acceptable(r)) {
      if (bad++ == 0) first_bad = to_json(r).dump();
    }
  }

  Outcome outcome(std::size_t min_exact = 1) const {
    std::ostringstream note;
    note << exact << " exact, " << excluded << " excluded";
    if (bad > 0) note << ", " << bad << " failing, first: " << first_bad;
    if (exact < min_exact) note << ", expected at least " << min_exact << " exact";
    return {bad == 0 && exact >= min_exact, note.str()};
  }
};

bool is_exact(const VerificationReport& r) { return r.status == Status::exact; }
bool is_exact_zero(const VerificationReport& r) { return r.status == Status::exact && r.lhs == "0" && r.rhs == "0"; }

std::vector<VerificationReport> run_sweep(cli::SweepConfig cfg) {
  cfg.seed = kSeed;
  return cli::run_points(cli::expand(cfg), 1);
}

Outcome nabla_boundary_value() {
  std::ostringstream out, err;
  const int code = cli::run({"dfc", "eval", "nabla", "--a", "0", "--p", "1/2", "--alpha", "3/2", "--t-index", "1"},
                            out, err);
  const std::string got = out.str();
  const bool ok = code == 0 && got == "1/2*G(1/2)^1\n";
  return {ok, "got '" + got.substr(0, got.find('\n')) + "', exit " + std::to_string(code)};
}

Outcome nabla_vanishing() {
  Tally t;
  for (const char* a : {"0", "1/4", "-2"}) {
    for (const char* p : {"1/2", "1/3"}) {
      for (unsigned m = 1; m <= 3; ++m) {
        const Rational alpha = R(p) + Rational(static_cast<long>(m));
        for (std::size_t ti = 1 + m; ti <= 1 + m + 6; ++ti) t.add(nabla_zero_check(R(a), R(p), alpha, ti), is_exact_zero);
      }
    }
  }
  return t.outcome(3 * 2 * 3 * 7);
}

Outcome power_rule() {
  Tally t;
  for (const char* a : {"0", "1/4", "-3"}) {
    for (const char* mu : {"0", "1/2", "1/3", "5/2", "-1/2"}) {
      for (const char* nu : {"1/2", "3/2", "-1/2", "-5/2", "2"}) {
        const bool zero_case = (R(mu) + R(nu)).is_negative_integer();
        for (const auto& r : power_rule_verify(R(a), R(mu), R(nu), 12)) t.add(r, is_exact);
        for (const auto& r : corollary_verify(R(a), R(mu), R(nu), 12)) {
          // The zero form only speaks about t on the grid at a.
          t.add(r, [&](const VerificationReport& rep) {
            if (!zero_case) return is_exact(rep);
            return is_exact_zero(rep) || rep.status == Status::domain_excluded;
          });
        }
      }
    }
  }
  return t.outcome();
}

Outcome mr_ae() {
  Tally t;
  cli::SweepConfig cfg;
  cfg.identity = "mr-ae";
  cfg.max_window = 12;
  cfg.fixed = {{"a", Rational(0)}};
  cfg.swept = {{"mu", {R("1/2"), R("1/3"), R("2/3"), R("3/2")}}};
  for (long trial = 0; trial < 50; ++trial) cfg.swept["trial"].push_back(Rational(trial));
  for (const auto& r : run_sweep(cfg)) t.add(r, is_exact);
  return t.outcome(4 * 50);
}

Outcome leibniz() {
  Tally t;
  cli::SweepConfig cfg;
  cfg.identity = "leibniz";
  cfg.max_window = 10;
  cfg.fixed = {{"a", Rational(0)}};
  cfg.swept = {{"alpha", {R("1/2"), R("1/3"), R("5/2")}}};
  for (long trial = 0; trial < 50; ++trial) cfg.swept["trial"].push_back(Rational(trial));
  for (const auto& r : run_sweep(cfg)) t.add(r, is_exact);
  return t.outcome(3 * 50 * 10);
}

Outcome binomial_and_lemma() {
  std::mt19937_64 rng(kSeed);
  auto rational = [&] {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = static_cast<long>(rng() % 12) + 1;
    return Rational(num, den);
  };
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<unsigned>(rng() % 13);
    t.add(binom_falling_check(rational(), rational(), n), is_exact);
  }
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<unsigned>(rng() % 13);
    t.add(binom_poch_check(rational(), rational(), n), is_exact);
  }
  for (int i = 0; i < 200; ++i) {
    const auto k = static_cast<unsigned>(rng() % 13);
    const auto ti = static_cast<std::size_t>(rng() % 4);
    const GridFunction g = random_rational_window(rational(), k + ti + 1, rng);
    t.add(alt_sum_lemma_check(g, rational(), k, ti), is_exact);
  }
  return t.outcome(600);
}

Outcome form1() {
  Tally t;
  for (const char* alpha : {"1/2", "3/2"}) {
    for (const char* beta : {"1/4", "1/2"}) {
      for (const char* gamma : {"1/3", "2", "5/2"}) {
        for (unsigned n = 0; n <= 8; ++n) {
          t.add(prop_form1_check(R(alpha), R(beta), R(gamma), n), [](const VerificationReport& r) {
            return r.status == Status::exact || r.status == Status::domain_excluded;
          });
        }
      }
    }
  }
  return t.outcome();
}

Outcome saalschutz() {
  Tally t;
  for (const char* a : {"1/2", "-1/2", "1/3", "1/5", "3/2"}) {
    for (const char* b : {"1/2", "-1/2", "1/3", "1/5", "3/2"}) {
      for (const char* c : {"2", "7/4", "5/3"}) {
        for (unsigned m = 0; m <= 10; ++m) {
          t.add(saalschutz_verify(R(a), R(b), R(c), m), [](const VerificationReport& r) {
            return r.status == Status::exact || r.status == Status::domain_excluded;
          });
        }
      }
    }
  }
  const auto point = saalschutz_verify(R("1/2"), R("1/2"), Rational(2), 1);
  t.add(point, [](const VerificationReport& r) { return is_exact(r) && r.lhs == "9/8" && r.rhs == "9/8"; });
  return t.outcome();
}

Outcome gamma_sum() {
  Tally t;
  for (const char* mu : {"1/2", "1/3"}) {
    for (long s = 1; s <= 3; ++s) {
      const Rational nu = Rational(-s) - R(mu);
      for (long n = s; n <= s + 8; ++n) t.add(gamma_sum_check(R(mu), nu, static_cast<unsigned>(n)), is_exact_zero);
    }
  }
  return t.outcome(2 * 3 * 9);
}

double param(const VerificationReport& r, const std::string& name) {
  for (const auto& [k, v] : r.params) {
    if (k == name) return v.to_double();
  }
  throw std::runtime_error("missing param " + name);
}

// Power-rule left side in plain doubles: sum_i w_{N-i} (mu+i)^(mu), with
// w_j = Gamma(nu+j)/(Gamma(nu) j!) by recurrence and the falling power as a
// tgamma ratio. Shares nothing with the exact pipeline.
double power_rule_lhs_double(double mu, double nu, int N) {
  std::vector<double> w(static_cast<std::size_t>(N) + 1, 1.0);
  for (int j = 1; j <= N; ++j) w[j] = w[j - 1] * (nu + j - 1) / j;
  double sum = 0.0;
  for (int i = 0; i <= N; ++i) sum += w[N - i] * std::tgamma(mu + i + 1) / std::tgamma(i + 1.0);
  return sum;
}

Outcome float_cross_check() {
  std::size_t bad = 0, independent = 0;
  double worst = 0.0;
  std::string first;
  auto check = [&](double lhs, double rhs) {
    const double gap = std::fabs(lhs - rhs);
    worst = std::max(worst, gap / (1.0 + std::fabs(lhs)));
    return std::isfinite(gap) && gap <= 1e-9 * (1.0 + std::fabs(lhs));
  };
  for (const auto& r : g_exact) {
    bool ok = r.lhs_float && r.rhs_float && check(*r.lhs_float, *r.rhs_float);
    if (ok && r.identity == "power-rule") {
      const double lhs = power_rule_lhs_double(param(r, "mu"), param(r, "nu"), static_cast<int>(param(r, "n")));
      ok = check(lhs, *r.rhs_float);
      ++independent;
    }
    if (!ok && bad++ == 0) first = to_json(r).dump();
  }
  std::ostringstream note;
  note << g_exact.size() << " exact reports (" << independent << " also against an independent double path), "
       << "worst scaled gap " << std::setprecision(3) << worst;
  if (bad > 0) note << ", " << bad << " failing, first: " << first;
  return {bad == 0 && !g_exact.empty(), note.str()};
}

Outcome verify_all() {
  std::ostringstream out, err;
  const int code = cli::run({"dfc", "verify", "all", "--config", std::string(DFC_SOURCE_DIR) + "/configs/sweeps.json"},
                            out, err);
  const std::string text = out.str();
  const auto pos = text.rfind("{\"summary\"");
  std::string summary = pos == std::string::npos ? "no summary" : text.substr(pos);
  if (!summary.empty() && summary.back() == '\n') summary.pop_back();
  return {code == 0, "exit " + std::to_string(code) + ", " + summary};
}

struct Criterion {
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"nabla-boundary-value", 1, nabla_boundary_value},
      {"nabla-vanishing", 5, nabla_vanishing},
      {"power-rule", 30, power_rule},
      {"mr-ae-agreement", 10, mr_ae},
      {"leibniz-rule", 30, leibniz},
      {"binomial-theorems-and-lemma", 10, binomial_and_lemma},
      {"form1-sweep", 10, form1},
      {"saalschutz", 20, saalschutz},
      {"gamma-sum", 5, gamma_sum},
      {"exact-float-cross-check", 1, float_cross_check},
      {"verify-all", 180, verify_all},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << " [" << std::fixed << std::setprecision(3) << secs << " s < "
              << std::setprecision(0) << c.limit_seconds << " s] " << o.note << (in_time ? "" : " (too slow)") << '\n';
    std::cout.unsetf(std::ios::fixed);
  }
  return failures == 0 ? 0 : 1;
}
