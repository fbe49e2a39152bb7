#include "cli/registry.hpp"

#include <random>
#include <set>

#include "dfc/error.hpp"
#include "dfc/identities.hpp"
#include "dfc/special.hpp"

namespace dfc::cli {

namespace {

unsigned count(const ParamValues& p, const std::string& name) {
  const Rational& v = p.at(name);
  const auto n = v.to_long();
  if (!n || *n < 0 || *n > 100000) throw DomainError(name + " must be a nonnegative integer, got " + v.str());
  return static_cast<unsigned>(*n);
}

std::vector<VerificationReport> single(VerificationReport r) { return {std::move(r)}; }

// Random windows are keyed by (seed, trial) only, so one trial draws the same
// functions for every other parameter of a sweep.
std::mt19937_64 trial_rng(const RunContext& ctx, unsigned trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(ctx.seed), static_cast<std::uint32_t>(ctx.seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

void tag_trial(std::vector<VerificationReport>& reports, unsigned trial) {
  for (auto& r : reports) r.params.emplace_back("trial", Rational(static_cast<long>(trial)));
}

const ParamSpec rat(const char* name) { return {name, ParamKind::rational, std::nullopt}; }
const ParamSpec cnt(const char* name) { return {name, ParamKind::count, std::nullopt}; }

std::vector<Verifier> build() {
  std::vector<Verifier> v;
  v.push_back({"falling-poch-bridge", {rat("t"), rat("alpha")}, [](const ParamValues& p, const RunContext&) {
                 return single(falling_poch_bridge_check(p.at("t"), p.at("alpha")));
               }});
  v.push_back({"index-law", {rat("t"), rat("alpha"), rat("beta")}, [](const ParamValues& p, const RunContext&) {
                 return single(index_law_check(p.at("t"), p.at("alpha"), p.at("beta")));
               }});
  v.push_back({"binom-falling", {rat("x"), rat("y"), cnt("n")}, [](const ParamValues& p, const RunContext&) {
                 return single(binom_falling_check(p.at("x"), p.at("y"), count(p, "n")));
               }});
  v.push_back({"binom-poch", {rat("x"), rat("y"), cnt("n")}, [](const ParamValues& p, const RunContext&) {
                 return single(binom_poch_check(p.at("x"), p.at("y"), count(p, "n")));
               }});
  v.push_back({"power-rule", {rat("a"), rat("mu"), rat("nu"), cnt("n-max")},
               [](const ParamValues& p, const RunContext&) {
                 return power_rule_verify(p.at("a"), p.at("mu"), p.at("nu"), count(p, "n-max"));
               }});
  v.push_back({"power-ratio", {rat("a"), rat("mu"), rat("nu"), cnt("n-max")},
               [](const ParamValues& p, const RunContext&) {
                 return corollary_verify(p.at("a"), p.at("mu"), p.at("nu"), count(p, "n-max"));
               }});
  v.push_back({"gamma-sum", {rat("mu"), rat("nu"), cnt("n")}, [](const ParamValues& p, const RunContext&) {
                 return single(gamma_sum_check(p.at("mu"), p.at("nu"), count(p, "n")));
               }});
  v.push_back({"nabla-zero", {rat("a"), rat("p"), rat("alpha"), cnt("t-index")},
               [](const ParamValues& p, const RunContext&) {
                 return single(nabla_zero_check(p.at("a"), p.at("p"), p.at("alpha"), count(p, "t-index")));
               }});
  v.push_back({"mr-ae", {rat("mu"), {"a", ParamKind::rational, "0"}, {"trial", ParamKind::count, "0"}},
               [](const ParamValues& p, const RunContext& ctx) {
                 const unsigned trial = count(p, "trial");
                 auto rng = trial_rng(ctx, trial);
                 const GridFunction f = random_rational_window(p.at("a"), ctx.max_window, rng);
                 auto reports = mr_ae_agreement(f, p.at("mu"));
                 tag_trial(reports, trial);
                 return reports;
               }});
  v.push_back({"alt-sum", {rat("alpha"), cnt("k"), {"a", ParamKind::rational, "0"}, {"trial", ParamKind::count, "0"}},
               [](const ParamValues& p, const RunContext& ctx) {
                 const unsigned trial = count(p, "trial");
                 const unsigned k = count(p, "k");
                 auto rng = trial_rng(ctx, trial);
                 const GridFunction g = random_rational_window(p.at("a"), ctx.max_window, rng);
                 std::vector<VerificationReport> reports;
                 for (std::size_t t = 0; k + t < g.size(); ++t) {
                   reports.push_back(alt_sum_lemma_check(g, p.at("alpha"), k, t));
                 }
                 if (reports.empty()) {
                   reports.push_back(excluded("alt-sum", {{"alpha", p.at("alpha")}, {"k", Rational(static_cast<long>(k))}},
                                              "k must be smaller than max_window"));
                 }
                 tag_trial(reports, trial);
                 return reports;
               }});
  v.push_back({"leibniz", {rat("alpha"), {"a", ParamKind::rational, "0"}, {"trial", ParamKind::count, "0"}},
               [](const ParamValues& p, const RunContext& ctx) {
                 const unsigned trial = count(p, "trial");
                 const FracOrder alpha(p.at("alpha"));
                 auto rng = trial_rng(ctx, trial);
                 const GridFunction f = random_rational_window(p.at("a"), ctx.max_window, rng);
                 const GridFunction g = random_rational_window(p.at("a"), ctx.max_window, rng);
                 std::vector<VerificationReport> reports;
                 for (std::size_t t = 0; t < ctx.max_window; ++t) reports.push_back(leibniz_verify(f, g, alpha, t));
                 tag_trial(reports, trial);
                 return reports;
               }});
  v.push_back({"form1", {rat("alpha"), rat("beta"), rat("gamma"), cnt("n")},
               [](const ParamValues& p, const RunContext&) {
                 return single(prop_form1_check(p.at("alpha"), p.at("beta"), p.at("gamma"), count(p, "n")));
               }});
  v.push_back({"saalschutz", {rat("pa"), rat("pb"), rat("pc"), cnt("m")},
               [](const ParamValues& p, const RunContext& ctx) {
                 return single(saalschutz_verify(p.at("pa"), p.at("pb"), p.at("pc"), count(p, "m"), ctx.force));
               }});
  return v;
}

}  // namespace

const std::vector<Verifier>& verifiers() {
  static const std::vector<Verifier> registry = build();
  return registry;
}

const Verifier* find_verifier(const std::string& name) {
  for (const auto& v : verifiers()) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::vector<std::string> all_param_names() {
  std::set<std::string> names;
  for (const auto& v : verifiers()) {
    for (const auto& p : v.params) names.insert(p.name);
  }
  return {names.begin(), names.end()};
}

}  // namespace dfc::cli
