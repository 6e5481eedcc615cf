// Acceptance suite: runs every acceptance criterion exactly (tolerance
// zero) and prints one PASS/FAIL line per criterion. Each criterion must
// finish within 10 seconds and the full verification suite within 60.
// Exit status 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gradus/hilbert.hpp"
#include "gradus/kappa.hpp"
#include "gradus/parse.hpp"
#include "gradus/suite.hpp"
#include "test_util.hpp"

using namespace gradus;

namespace {

constexpr double kCriterionBudgetSeconds = 10.0;
constexpr double kSuiteBudgetSeconds = 60.0;

struct Criterion {
  std::string id;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool require(bool condition, std::string& why, const std::string& message) {
  if (!condition && why.empty()) why = message;
  return condition;
}

bool all_pass(const std::vector<CheckResult>& checks, std::string& why) {
  bool ok = true;
  for (const auto& c : checks)
    ok &= require(c.pass, why, c.id + ": " + (c.detail.empty() ? "failed" : c.detail));
  return ok;
}

bool criterion_au_series(std::string& why) {
  return require(series_eq(hilbert_series(build_AU()), series_s()), why,
                 "series is " + print_series(series_reduce(hilbert_series(build_AU()))));
}

bool criterion_cohom_series(std::string& why) {
  return require(series_eq(hilbert_series(build_cohom()), series_coh()), why,
                 "series is " +
                     print_series(series_reduce(hilbert_series(build_cohom()))));
}

bool criterion_excision(std::string& why) {
  RationalSeries coh = hilbert_series(build_cohom());
  RationalSeries s = hilbert_series(build_AU());
  RationalSeries r = parse_series("T^2*(1+3*T+6*T^2+3*T^3+T^4)/((1-T^2)*(1-T)^2)");
  return require(series_eq(coh, series_add(s, r)), why, "coh != s + r");
}

bool criterion_s0_series(std::string& why) {
  RationalSeries s0 = hilbert_series(build_S0());
  bool ok = require(series_eq(s0, parse_series("1+3*T+6*T^2+3*T^3+T^4")), why,
                    "series is " + print_series(series_reduce(s0)));
  ok &= require(
      series_eq(series_mul(s0, parse_series("1/((1-T)^2)")), series_strata()), why,
      "strata series mismatch");
  return ok;
}

bool criterion_vb_series(std::string& why) {
  bool ok = true;
  for (long d : {0L, 2L, 3L})
    ok &= require(series_eq(hilbert_series(build_VB(d)), series_coh()), why,
                  "mismatch at d=" + std::to_string(d));
  return ok;
}

bool criterion_bun_model(std::string& why) {
  return all_pass(exterior_bun_model(), why);
}

bool criterion_jxj_model(std::string& why) {
  return all_pass(exterior_jxj_model(), why);
}

bool criterion_kappa_rewriter(std::string& why) {
  const Ring& ring = kappa_generator_ring();
  auto var = [&](const char* n) {
    return Polynomial::variable(ring, *ring.index_of(n));
  };
  bool ok = true;

  ok &= require(rewrite_to_generators(parse_kappa("k[0,0,0]"), 3) ==
                    Polynomial::constant(ring, Rational(2)),
                why, "k[0,0,0] != 2");
  ok &= require(rewrite_to_generators(parse_kappa("k[0,2,0]"), 3) ==
                    Rational(1, 2) * (var("k010") * var("k010")),
                why, "k[0,2,0] != k010^2/2");
  ok &= require(
      rewrite_to_generators(parse_kappa("k[-1,0,2]"), 3) == var("k-102"), why,
      "k[-1,0,2] is not a fixpoint");
  for (long d : {0L, 2L, 3L})
    ok &= require(rewrite_to_generators(rule_mixed_product(1, 1, d), d) == var("k-111"),
                  why, "k[-1,1,1] is not a rule-(iv) fixpoint at d=" + std::to_string(d));

  for (int i = 2; i <= 3; ++i)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        ok &= require(
            rewrite_to_generators(KappaExpression::atom(KappaSymbol(i, m, n)), 3)
                .is_zero(),
            why, "k[" + std::to_string(i) + ",...] != 0");

  for (int m = 0; m <= 4 && ok; ++m)
    for (int n = 0; n <= 4 && ok; ++n)
      for (int mp = 0; mp <= 4 && ok; ++mp)
        for (int np = 0; np <= 4 && ok; ++np) {
          Polynomial lhs =
              rewrite_to_generators(KappaExpression::atom(KappaSymbol(0, m, n)), 3) *
              rewrite_to_generators(KappaExpression::atom(KappaSymbol(0, mp, np)), 3);
          Polynomial rhs = Rational(2) * rewrite_to_generators(
                                             KappaExpression::atom(
                                                 KappaSymbol(0, m + mp, n + np)),
                                             3);
          ok &= require(lhs == rhs, why, "multiplicativity fails");
        }
  return ok;
}

bool criterion_property_suites(std::string& why) {
  bool ok = true;

  // Hilbert series identical under both orderings for every encoded ring.
  std::vector<Ideal> encoded;
  encoded.push_back(build_AU());
  encoded.push_back(build_cohom());
  encoded.push_back(build_S0());
  for (long d : {0L, 2L, 3L}) encoded.push_back(build_VB(d));
  for (const Ideal& ideal : encoded)
    ok &= require(series_eq(hilbert_series(ideal, MonomialOrder(OrderKind::GrevLex)),
                            hilbert_series(ideal, MonomialOrder(OrderKind::Lex))),
                  why, "ordering dependence detected");

  // Brute-force degree-slice oracle up to degree 8.
  for (const Ideal& ideal : encoded) {
    std::vector<Rational> coeffs = series_expand(hilbert_series(ideal), 8);
    for (int64_t deg = 0; deg <= 8; ++deg)
      ok &= require(coeffs[size_t(deg)] ==
                        Rational(testutil::quotient_slice_dim(ideal, deg)),
                    why, "oracle mismatch at degree " + std::to_string(deg));
  }

  // Groebner normal-form idempotence and membership audits, 50 seeds.
  for (unsigned seed = 0; seed < 50; ++seed) {
    std::mt19937 rng(seed);
    Ideal ideal = testutil::random_small_ideal(rng);
    GroebnerBasis gb = groebner_basis(ideal);
    Polynomial p = testutil::random_poly(ideal.ring, rng, 4, 3);
    Polynomial nf = normal_form(p, gb);
    ok &= require(normal_form(nf, gb) == nf, why,
                  "normal form not idempotent (seed " + std::to_string(seed) + ")");
    ok &= require(is_member(p - nf, ideal), why,
                  "p - nf(p) not a member (seed " + std::to_string(seed) + ")");
    for (const auto& g : ideal.gens)
      ok &= require(normal_form(g, gb).is_zero(), why,
                    "generator does not reduce to zero (seed " + std::to_string(seed) +
                        ")");
  }
  return ok;
}

bool criterion_verify_paper(std::string& why) {
  SuiteReport report = run_all();
  return require(report.failed == 0, why,
                 std::to_string(report.failed) + " checks failed");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"criterion-1-au-hilbert", kCriterionBudgetSeconds, criterion_au_series},
      {"criterion-2-cohom-hilbert", kCriterionBudgetSeconds, criterion_cohom_series},
      {"criterion-3-excision-identity", kCriterionBudgetSeconds, criterion_excision},
      {"criterion-4-s0-hilbert", kCriterionBudgetSeconds, criterion_s0_series},
      {"criterion-5-vb-d-independence", kCriterionBudgetSeconds, criterion_vb_series},
      {"criterion-6-exterior-bun-model", kCriterionBudgetSeconds, criterion_bun_model},
      {"criterion-7-exterior-jxj-model", kCriterionBudgetSeconds, criterion_jxj_model},
      {"criterion-8-kappa-rewriter", kCriterionBudgetSeconds, criterion_kappa_rewriter},
      {"criterion-9-property-suites", kCriterionBudgetSeconds,
       criterion_property_suites},
      {"verify-paper-total", kSuiteBudgetSeconds, criterion_verify_paper},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      ok = false;
      why = "exceeded " + std::to_string(criterion.budget_seconds) + "s budget";
    }
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id.c_str(),
                seconds, why.empty() ? "" : " ", why.c_str());
    if (!ok) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - size_t(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
