#include "gradus/suite.hpp"

#include <algorithm>
#include <sstream>

#include "gradus/hilbert.hpp"
#include "gradus/kappa.hpp"
#include "gradus/linalg.hpp"
#include "gradus/parse.hpp"

namespace gradus {

namespace {

Ring make_even_ring(std::initializer_list<std::pair<const char*, int>> vars) {
  RingSpec spec;
  for (const auto& [name, weight] : vars)
    spec.vars.push_back({name, weight, Parity::Even});
  return Ring(std::move(spec));
}

std::vector<Polynomial> parse_all(const Ring& ring, const Scope& lets,
                                  std::initializer_list<const char*> exprs) {
  std::vector<Polynomial> out;
  for (const char* e : exprs) out.push_back(parse_poly(ring, e, &lets));
  return out;
}

CheckResult check_zero(const std::string& id, const Polynomial& value) {
  return {id, value.is_zero(), value.is_zero() ? "" : print_poly(value)};
}

CheckResult check_series_eq(const std::string& id, const RationalSeries& got,
                            const RationalSeries& want) {
  bool ok = series_eq(got, want);
  return {id, ok, ok ? "" : print_series(series_reduce(got))};
}

std::string two_digit(size_t k) {
  return k < 10 ? "0" + std::to_string(k) : std::to_string(k);
}

// The ten relation shapes shared by the cohomology presentation and both
// substituted models, as expressions in three classes of degrees 1, 3, 2.
std::vector<Polynomial> relation_values(const Polynomial& x1, const Polynomial& x2,
                                        const Polynomial& x3) {
  return {
      x1.pow(3),
      x1.pow(2) * x3,
      x1.pow(2) * x2 + x1 * x3.pow(2),
      Rational(6) * (x1 * x2 * x3) + x3.pow(3),
      x1 * x3.pow(3),
      x1 * x2.pow(2) + x2 * x3.pow(2),
      x2.pow(2) * x3,
      x2 * x3.pow(3),
      x2.pow(3),
      x3.pow(5),
  };
}

}  // namespace

Ideal build_AU() {
  Ring ring = make_even_ring({{"x", 1}, {"y", 1}, {"z", 1}, {"b", 2}});
  Scope lets;
  lets.emplace("H", parse_poly(ring, "1/2*(4*z - y)"));
  lets.emplace("T", parse_poly(ring, "1/2*(3*x - y)"));
  lets.emplace("B", parse_poly(ring,
                               "1/2*(1/2*(y - x) - z)^2 - 1/2*(1/12*x*(6*y - 9*x) - b"
                               " - 1/4*x^2 + 1/8*x^2 + 1/8*(4*z - y)^2)"));
  return Ideal(ring, parse_all(ring, lets,
                               {
                                   "T^3",
                                   "H^2*T^2 - 4*B*T^2",
                                   "B*H^2 - B*H*T + 1/2*B*T^2",
                                   "B*H^2 - B^2",
                                   "H^3 + H^2*T + 1/2*H*T^2 - 4*B*H",
                               }));
}

Ideal build_cohom() {
  Ring ring = make_even_ring(
      {{"a1", 1}, {"p1", 1}, {"p2", 3}, {"p3", 2}, {"a2", 1}, {"c2", 2}});
  auto var = [&](const char* n) { return parse_poly(ring, n); };
  return Ideal(ring, relation_values(var("p1"), var("p2"), var("p3")));
}

Ideal build_S0() {
  Ring ring = make_even_ring({{"P1", 1}, {"P2", 1}, {"M", 1}});
  Scope lets;
  return Ideal(ring, parse_all(ring, lets,
                               {
                                   "P1^3",
                                   "P2^3",
                                   "M^3",
                                   "(M - P2)*P1^2",
                                   "(M - P1)*P2^2",
                                   "M^2*(P1 - P2)",
                                   "M^2*P1 + P1*P2*(P1 + P2) - 2*M*P1*P2",
                               }));
}

Ideal build_VB(long d) { return theorem_b_ideal(d); }

RationalSeries series_s() {
  return parse_series("(1+2*T+4*T^2+4*T^3+2*T^4+T^5)/(1-T)");
}

RationalSeries series_coh() {
  return parse_series(
      "(1+T+2*T^2+2*T^3+2*T^4+2*T^5+2*T^6+T^7+T^8)/((1-T^2)*(1-T)^2)");
}

RationalSeries series_strata() {
  return parse_series("(1+3*T+6*T^2+3*T^3+T^4)/((1-T)^2)");
}

std::vector<CheckResult> hilbert_checks() {
  std::vector<CheckResult> out;
  out.push_back(check_series_eq("au-hilbert", hilbert_series(build_AU()), series_s()));
  out.push_back(
      check_series_eq("cohom-hilbert", hilbert_series(build_cohom()), series_coh()));
  RationalSeries s0 = hilbert_series(build_S0());
  out.push_back(
      check_series_eq("s0-hilbert", s0, parse_series("1+3*T+6*T^2+3*T^3+T^4")));
  out.push_back(check_series_eq(
      "s0-strata", series_mul(s0, parse_series("1/((1-T)^2)")), series_strata()));
  for (long d : {0L, 2L, 3L})
    out.push_back(check_series_eq("vb" + std::to_string(d) + "-hilbert",
                                  hilbert_series(build_VB(d)), series_coh()));
  return out;
}

std::vector<CheckResult> exterior_bun_model(bool perturb) {
  RingSpec spec;
  for (const char* n : {"b11", "b12", "b13", "b14"})
    spec.vars.push_back({n, 1, Parity::Odd});
  for (const char* n : {"b21", "b22", "b23", "b24"})
    spec.vars.push_back({n, 3, Parity::Odd});
  Ring ring(std::move(spec));

  Polynomial p1 = parse_poly(ring, "b11*b13 + b12*b14");
  Polynomial p2 = parse_poly(ring, "b21*b23 + b22*b24");
  Polynomial p3 = parse_poly(ring, "b11*b23 - b13*b21 + b12*b24 - b14*b22");

  std::vector<Polynomial> relations = relation_values(p1, p2, p3);
  if (perturb) relations[3] += p3.pow(3);  // test hook: breaks bun-relation-04

  std::vector<CheckResult> out;
  for (size_t k = 0; k < relations.size(); ++k)
    out.push_back(check_zero("bun-relation-" + two_digit(k + 1), relations[k]));

  std::vector<Polynomial> basis = {
      Polynomial::constant(ring, Rational(1)),
      p1,
      p1 * p1,
      p3,
      p1 * p3,
      p2,
      p1 * p2,
      p3 * p3,
      p1 * p3 * p3,
      p2 * p3,
      p2 * p2,
      p3.pow(3),
      p2 * p3 * p3,
      p3.pow(4),
  };
  size_t rank = rank_of_span(basis);
  out.push_back({"bun-rank-14", rank == 14,
                 rank == 14 ? "" : "rank=" + std::to_string(rank)});
  return out;
}

std::vector<CheckResult> exterior_jxj_model() {
  RingSpec spec;
  for (const char* n : {"e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4"})
    spec.vars.push_back({n, 1, Parity::Odd});
  Ring ring(std::move(spec));

  Polynomial P1 = parse_poly(ring, "e1*e3 + e2*e4");
  Polynomial P2 = parse_poly(ring, "f1*f3 + f2*f4");
  Polynomial M = parse_poly(ring, "(e1+f1)*(e3+f3) + (e2+f2)*(e4+f4)");
  Polynomial D = parse_poly(ring, "(e1-f1)*(e3-f3) + (e2-f2)*(e4-f4)");

  std::vector<Polynomial> relations = {
      P1.pow(3),
      P2.pow(3),
      M.pow(3),
      (M - P2) * P1.pow(2),
      (M - P1) * P2.pow(2),
      M.pow(2) * (P1 - P2),
      M.pow(2) * P1 + P1 * P2 * (P1 + P2) - Rational(2) * (M * P1 * P2),
  };
  std::vector<CheckResult> out;
  for (size_t k = 0; k < relations.size(); ++k)
    out.push_back(check_zero("jxj-relation-" + two_digit(k + 1), relations[k]));

  Polynomial two_sum = Rational(2) * (P1 + P2);
  out.push_back(check_zero("jxj-square-identity", two_sum - M - D));
  out.push_back(check_zero(
      "jxj-diagonal-identity",
      Rational(1, 2) * (D * D) - Rational(1, 2) * ((two_sum - M) * (two_sum - M))));

  std::vector<Polynomial> basis = {
      Polynomial::constant(ring, Rational(1)),
      P1,
      P2,
      M,
      P1 * P1,
      P2 * P2,
      M * M,
      P1 * P2,
      P1 * M,
      P2 * M,
      M * M * P1,
      P1 * P2 * P2,
      P1 * P1 * P2,
      M * M * P1 * P2,
  };
  size_t rank = rank_of_span(basis);
  out.push_back({"jxj-rank-14", rank == 14,
                 rank == 14 ? "" : "rank=" + std::to_string(rank)});
  return out;
}

std::vector<CheckResult> excision_and_hecke_checks() {
  RationalSeries s = hilbert_series(build_AU());
  RationalSeries coh = hilbert_series(build_cohom());
  RationalSeries gerbe = parse_series("1/((1-T)^2)");
  RationalSeries r = series_mul(parse_series("T^2/(1-T^2)"),
                                series_mul(hilbert_series(build_S0()), gerbe));
  RationalSeries total = series_add(s, r);

  std::vector<CheckResult> out;
  out.push_back(check_series_eq("excision-coh-eq-s-plus-r", coh, total));
  bool leq = series_leq(s, total, 100);
  out.push_back({"excision-s-leq-total", leq, leq ? "" : "coefficient exceeds bound"});

  RationalSeries one_plus_t = parse_series("1+T");
  RationalSeries roundtrip = series_div(series_mul(total, one_plus_t), one_plus_t);
  out.push_back(check_series_eq("hecke-cancellation", roundtrip, total));
  return out;
}

std::vector<CheckResult> kappa_checks() {
  const Ring& ring = kappa_generator_ring();
  auto var = [&](const char* n) {
    return Polynomial::variable(ring, *ring.index_of(n));
  };
  std::vector<CheckResult> out;

  Polynomial k000 = rewrite_to_generators(parse_kappa("k[0,0,0]"), 3);
  out.push_back(check_zero("kappa-constant-000",
                           k000 - Polynomial::constant(ring, Rational(2))));

  Polynomial k020 = rewrite_to_generators(parse_kappa("k[0,2,0]"), 3);
  out.push_back(
      check_zero("kappa-square-020", k020 - Rational(1, 2) * (var("k010") * var("k010"))));

  {
    bool ok = true;
    std::string witness;
    for (int i = 2; i <= 3 && ok; ++i)
      for (int m = 0; m <= 3 && ok; ++m)
        for (int n = 0; n <= 3 && ok; ++n)
          for (int threshold : {1, 2}) {
            RewriteOptions opts;
            opts.vanish_threshold = threshold;
            Polynomial v =
                rewrite_to_generators(KappaExpression::atom(KappaSymbol(i, m, n)), 3, opts);
            if (!v.is_zero()) {
              ok = false;
              witness = KappaSymbol(i, m, n).name() + " -> " + print_poly(v);
              break;
            }
          }
    out.push_back({"kappa-vanish-high", ok, witness});
  }

  Polynomial k102 = rewrite_to_generators(parse_kappa("k[-1,0,2]"), 3);
  out.push_back(check_zero("kappa-fixpoint-102", k102 - var("k-102")));

  {
    // rule (iv) applied to k[-1,1,1] must collapse back to the generator
    bool ok = true;
    std::string witness;
    for (long d : {0L, 2L, 3L}) {
      Polynomial v = rewrite_to_generators(rule_mixed_product(1, 1, d), d);
      if (v != var("k-111")) {
        ok = false;
        witness = "d=" + std::to_string(d) + ": " + print_poly(v);
        break;
      }
    }
    out.push_back({"kappa-fixpoint-111", ok, witness});
  }

  {
    bool ok = true;
    std::string witness;
    for (int m = 0; m <= 4 && ok; ++m)
      for (int n = 0; n <= 4 && ok; ++n)
        for (int mp = 0; mp <= 4 && ok; ++mp)
          for (int np = 0; np <= 4; ++np) {
            Polynomial lhs =
                rewrite_to_generators(KappaExpression::atom(KappaSymbol(0, m, n)), 3) *
                rewrite_to_generators(KappaExpression::atom(KappaSymbol(0, mp, np)), 3);
            Polynomial rhs =
                Rational(2) * rewrite_to_generators(
                                  KappaExpression::atom(KappaSymbol(0, m + mp, n + np)), 3);
            if (lhs != rhs) {
              ok = false;
              witness = "m,n,m',n'=" + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(mp) + "," + std::to_string(np);
              break;
            }
          }
    out.push_back({"kappa-multiplicativity", ok, witness});
  }

  {
    bool ok = true;
    std::string witness;
    for (long d : {0L, 2L, 3L}) {
      auto [x1, x2, x3] = x_generators(d);
      if (x1.degree().value != 1 || x2.degree().value != 3 || x3.degree().value != 2)
        ok = false;
      for (const auto& rel : theorem_b_relations(d))
        if (rel.degree().kind == Degree::Kind::Inhomogeneous) ok = false;
      if (!ok) {
        witness = "d=" + std::to_string(d);
        break;
      }
    }
    out.push_back({"kappa-relations-homogeneous", ok, witness});
  }

  {
    Polynomial got = rewrite_to_generators(parse_kappa("k[-1,0,3]"), 3);
    Polynomial want = Rational(3, 2) * (var("k001") * var("k-102")) -
                      Rational(3, 4) * (var("k001") * var("k001") * var("k-101"));
    out.push_back(check_zero("kappa-rewrite-103", got - want));
  }

  {
    KappaExpression x1 = Rational(1, 2) * (Rational(3) * parse_kappa("k[0,1,0]") -
                                           parse_kappa("k[-1,2,0]"));
    KappaExpression x3 =
        Rational(1, 2) *
        (parse_kappa("k[0,1,0]") * parse_kappa("k[-1,0,1]") +
         Rational(3) * parse_kappa("k[0,0,1]") - Rational(2) * parse_kappa("k[-1,1,1]"));
    out.push_back(check_zero("kappa-nf-x1cubed", kappa_normal_form(x1.pow(3), 3)));
    out.push_back(check_zero("kappa-nf-x3fifth", kappa_normal_form(x3.pow(5), 3)));
    Polynomial gen_nf = kappa_normal_form(parse_kappa("k[0,1,0]"), 3);
    out.push_back(check_zero("kappa-nf-generator", gen_nf - var("k010")));
  }

  return out;
}

SuiteReport run_all(const SuiteOptions& options) {
  SuiteReport report;
  auto append = [&](std::vector<CheckResult> group) {
    for (auto& c : group) report.results.push_back(std::move(c));
  };
  append(hilbert_checks());
  append(exterior_bun_model(options.perturb));
  append(exterior_jxj_model());
  append(excision_and_hecke_checks());
  append(kappa_checks());
  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (const auto& c : report.results)
    if (!c.pass) ++report.failed;
  return report;
}

std::string render_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.results) {
    out << c.id << (c.pass ? " PASS" : " FAIL");
    if (!c.pass && !c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  out << "total=" << report.results.size() << " failed=" << report.failed << "\n";
  return out.str();
}

}  // namespace gradus
