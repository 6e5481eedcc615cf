#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradus/linalg.hpp"
#include "gradus/parse.hpp"
#include "gradus/ring.hpp"
#include "test_util.hpp"

using namespace gradus;
using testutil::random_monomial;
using testutil::random_nonzero_rational;
using testutil::random_poly;

namespace {

Ring figure1_ring() {
  return Ring(RingSpec{{{"x", 1, Parity::Even},
                        {"y", 1, Parity::Even},
                        {"z", 1, Parity::Even},
                        {"b", 2, Parity::Even}}});
}

Ring exterior_ring() {
  RingSpec spec;
  for (const char* n : {"b11", "b12", "b13", "b14"})
    spec.vars.push_back({n, 1, Parity::Odd});
  for (const char* n : {"b21", "b22", "b23", "b24"})
    spec.vars.push_back({n, 3, Parity::Odd});
  return Ring(std::move(spec));
}

// audit: canonical sparse form, odd exponents <= 1
void check_canonical(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    CHECK(!c.is_zero());
    for (size_t i = 0; i < p.ring().size(); ++i)
      if (p.ring().var(i).parity == Parity::Odd) CHECK(m.exp(i) <= 1);
  }
}

}  // namespace

TEST_CASE("ring construction") {
  CHECK(figure1_ring().size() == 4);
  CHECK(!figure1_ring().has_odd());
  CHECK(exterior_ring().has_odd());
  CHECK(Ring(RingSpec{}).size() == 0);  // constants-only ring

  CHECK_THROWS_AS(Ring(RingSpec{{{"x", 1, Parity::Even}, {"x", 2, Parity::Even}}}),
                  RingError);
  CHECK_THROWS_AS(Ring(RingSpec{{{"x", 0, Parity::Even}}}), RingError);
  CHECK_THROWS_AS(Ring(RingSpec{{{"x", -3, Parity::Even}}}), RingError);
}

TEST_CASE("degenerate ring holds constants") {
  Ring ring((RingSpec()));
  Polynomial five = Polynomial::constant(ring, Rational(5));
  CHECK(five.degree().kind == Degree::Kind::Homogeneous);
  CHECK(five.degree().value == 0);
  CHECK((five * five) == Polynomial::constant(ring, Rational(25)));
}

TEST_CASE("odd squares vanish and odd variables anticommute") {
  Ring ring = exterior_ring();
  Polynomial b11 = parse_poly(ring, "b11");
  Polynomial b12 = parse_poly(ring, "b12");
  CHECK((b11 * b11).is_zero());
  CHECK(b12 * b11 == -(b11 * b12));
}

TEST_CASE("graded square of a two-term form") {
  // p1^2 expands to -2 b11 b12 b13 b14: the cross terms each pick up one
  // transposition sign
  Ring ring = exterior_ring();
  Polynomial p1 = parse_poly(ring, "b11*b13 + b12*b14");
  Polynomial expected = Rational(-2) * parse_poly(ring, "b11*b12*b13*b14");
  CHECK(p1 * p1 == expected);
  CHECK(p1.pow(3).is_zero());
}

TEST_CASE("mixed rings are rejected") {
  Ring a = figure1_ring();
  Ring b = exterior_ring();
  Polynomial pa = parse_poly(a, "x");
  Polynomial pb = parse_poly(b, "b11");
  CHECK_THROWS_AS(pa + pb, RingError);
  CHECK_THROWS_AS(pa * pb, RingError);
}

TEST_CASE("identical specs are the same ring") {
  Ring a = figure1_ring();
  Ring b = figure1_ring();
  CHECK(parse_poly(a, "x + y") == parse_poly(b, "x + y"));
}

TEST_CASE("add, scalar, pow") {
  Ring ring = figure1_ring();
  Polynomial p = parse_poly(ring, "x^2 - 3*y*z + b");
  CHECK((p + Rational(-1) * p).is_zero());
  CHECK(p.pow(0) == Polynomial::constant(ring, Rational(1)));
  CHECK(parse_poly(ring, "x + y").pow(2) == parse_poly(ring, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("weighted degree") {
  Ring ring = exterior_ring();
  Polynomial p2 = parse_poly(ring, "b21*b23 + b22*b24");
  Degree d = p2.degree();
  CHECK(d.kind == Degree::Kind::Homogeneous);
  CHECK(d.value == 6);

  Ring fig1 = figure1_ring();
  CHECK(parse_poly(fig1, "5").degree().value == 0);
  CHECK(parse_poly(fig1, "5").degree().kind == Degree::Kind::Homogeneous);
  CHECK(parse_poly(fig1, "x + b").degree().kind == Degree::Kind::Inhomogeneous);
  CHECK(parse_poly(fig1, "0").degree().kind == Degree::Kind::Zero);
}

TEST_CASE("graded component") {
  Ring ring = figure1_ring();
  Polynomial p = parse_poly(ring, "x + b");
  CHECK(p.graded_component(2) == parse_poly(ring, "b"));
  CHECK(p.graded_component(1) == parse_poly(ring, "x"));
  CHECK(p.graded_component(7).is_zero());

  Polynomial h = parse_poly(ring, "x*y + z^2");
  CHECK(h.graded_component(2) == h);

  Ring ext = exterior_ring();
  Polynomial p1sq = parse_poly(ext, "b11*b13 + b12*b14").pow(2);
  CHECK(p1sq.graded_component(4) == p1sq);

  // components sum back to the whole
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial q = random_poly(ring, rng);
    Polynomial sum(ring);
    for (int64_t deg = 0; deg <= 20; ++deg) sum += q.graded_component(deg);
    CHECK(sum == q);
  }
}

TEST_CASE("monomial sign-commutation property") {
  // mul(m, m') == (-1)^{o(m) o(m')} mul(m', m)
  Ring ring = exterior_ring();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial m = random_monomial(ring, rng, 1);
    Monomial n = random_monomial(ring, rng, 1);
    Polynomial pm = Polynomial::term(ring, m, Rational(1));
    Polynomial pn = Polynomial::term(ring, n, Rational(1));
    int o = odd_count(ring, m) * odd_count(ring, n);
    Polynomial lhs = pm * pn;
    Polynomial rhs = pn * pm;
    if (o % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("associativity and distributivity on random triples") {
  std::mt19937 rng(13);
  Ring rings[] = {figure1_ring(), exterior_ring()};
  for (const Ring& ring : rings) {
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial a = random_poly(ring, rng, 3, 2);
      Polynomial b = random_poly(ring, rng, 3, 2);
      Polynomial c = random_poly(ring, rng, 3, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      check_canonical(a * b);
      check_canonical(a + b);
      check_canonical(a - c);
    }
  }
}

TEST_CASE("degree additivity for homogeneous products") {
  std::mt19937 rng(17);
  Ring ring = exterior_ring();
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = Polynomial::term(ring, random_monomial(ring, rng, 1),
                                    random_nonzero_rational(rng));
    Polynomial b = Polynomial::term(ring, random_monomial(ring, rng, 1),
                                    random_nonzero_rational(rng));
    Polynomial prod = a * b;
    if (prod.is_zero()) continue;
    CHECK(prod.degree().value == a.degree().value + b.degree().value);
  }
}

TEST_CASE("rank of span: examples") {
  Ring ring = exterior_ring();
  Polynomial p1 = parse_poly(ring, "b11*b13 + b12*b14");
  CHECK(rank_of_span({p1, Rational(2) * p1}) == 1);
  CHECK(rank_of_span({Polynomial(ring)}) == 0);
  CHECK(rank_of_span({}) == 0);

  Scope lets;
  lets.emplace("p1", p1);
  lets.emplace("p2", parse_poly(ring, "b21*b23 + b22*b24"));
  lets.emplace("p3", parse_poly(ring, "b11*b23 - b13*b21 + b12*b24 - b14*b22"));
  const char* monomials[] = {"1",       "p1",      "p1^2",    "p3",     "p1*p3",
                             "p2",      "p1*p2",   "p3^2",    "p1*p3^2", "p2*p3",
                             "p2^2",    "p3^3",    "p2*p3^2", "p3^4"};
  std::vector<Polynomial> basis;
  for (const char* m : monomials) basis.push_back(parse_poly(ring, m, &lets));
  CHECK(rank_of_span(basis) == 14);
}

TEST_CASE("rank is invariant under permutation and rescaling") {
  std::mt19937 rng(19);
  Ring ring = figure1_ring();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> ps;
    for (int i = 0; i < 5; ++i) ps.push_back(random_poly(ring, rng, 3, 2));
    size_t r = rank_of_span(ps);
    std::shuffle(ps.begin(), ps.end(), rng);
    for (auto& p : ps) p = random_nonzero_rational(rng) * p;
    CHECK(rank_of_span(ps) == r);
  }
}

TEST_CASE("non-canonical term construction is rejected") {
  Ring ring = exterior_ring();
  std::vector<int> exps(ring.size(), 0);
  exps[0] = 2;  // odd variable squared
  CHECK_THROWS_AS(Polynomial::term(ring, Monomial(exps), Rational(1)), RingError);
}
