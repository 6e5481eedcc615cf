#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gradus/groebner.hpp"
#include "gradus/parse.hpp"
#include "gradus/suite.hpp"
#include "test_util.hpp"

using namespace gradus;
using testutil::random_nonzero_rational;
using testutil::random_small_ideal;

namespace {

Ring xy_ring() {
  return Ring(RingSpec{{{"x", 1, Parity::Even}, {"y", 1, Parity::Even}}});
}

std::vector<Polynomial> sorted_elements(const GroebnerBasis& gb) {
  return gb.elements();  // already canonically sorted by leading monomial
}

}  // namespace

TEST_CASE("principal ideal") {
  Ring ring = xy_ring();
  Ideal ideal(ring, {parse_poly(ring, "x^2")});
  GroebnerBasis gb = groebner_basis(ideal);
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == parse_poly(ring, "x^2"));
}

TEST_CASE("pair of quadrics reduces to pure powers") {
  Ring ring = xy_ring();
  Ideal ideal(ring, {parse_poly(ring, "x^2 - y^2"), parse_poly(ring, "x^2 + y^2")});
  GroebnerBasis gb = groebner_basis(ideal);
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == parse_poly(ring, "y^2"));
  CHECK(gb.elements()[1] == parse_poly(ring, "x^2"));
}

TEST_CASE("zero ideal") {
  Ring ring = xy_ring();
  Ideal ideal(ring, {Polynomial(ring)});
  CHECK(groebner_basis(ideal).elements().empty());
  CHECK(groebner_basis(Ideal(ring, {})).elements().empty());
}

TEST_CASE("odd variables are rejected") {
  Ring ring(RingSpec{{{"e", 1, Parity::Odd}}});
  Ideal ideal(ring, {});
  CHECK_THROWS_AS(groebner_basis(ideal), RingError);
}

TEST_CASE("normal form examples") {
  Ring ring = xy_ring();
  GroebnerBasis gb = groebner_basis(Ideal(ring, {parse_poly(ring, "x^2")}));
  CHECK(normal_form(parse_poly(ring, "x^2"), gb).is_zero());
  CHECK(normal_form(parse_poly(ring, "x^3 + x*y"), gb) == parse_poly(ring, "x*y"));
  CHECK(normal_form(parse_poly(ring, "1"), gb) == parse_poly(ring, "1"));

  // units are never reducible modulo a proper homogeneous ideal
  GroebnerBasis au = groebner_basis(build_AU());
  CHECK(normal_form(Polynomial::constant(au.ring(), Rational(1)), au) ==
        Polynomial::constant(au.ring(), Rational(1)));
}

TEST_CASE("membership examples") {
  Ring ring = xy_ring();
  Ideal ideal(ring, {parse_poly(ring, "x^2")});
  CHECK(is_member(parse_poly(ring, "x^2*y"), ideal));
  CHECK(!is_member(parse_poly(ring, "y"), ideal));

  Ideal au = build_AU();
  CHECK(is_member(au.gens[0], au));  // T^3 is a generator
}

TEST_CASE("mixed rings rejected in normal form") {
  Ring a = xy_ring();
  Ring b(RingSpec{{{"u", 1, Parity::Even}}});
  GroebnerBasis gb = groebner_basis(Ideal(a, {parse_poly(a, "x^2")}));
  CHECK_THROWS_AS(normal_form(parse_poly(b, "u"), gb), RingError);
}

TEST_CASE("randomized basis audits") {
  // 50 seeds, 3 variables, generators of degree <= 3
  for (unsigned seed = 0; seed < 50; ++seed) {
    std::mt19937 rng(seed);
    Ideal ideal = random_small_ideal(rng);
    MonomialOrder ord(seed % 2 == 0 ? OrderKind::GrevLex : OrderKind::Lex);
    GroebnerBasis gb = groebner_basis(ideal, ord);

    // reduced-basis shape: monic, mutually irreducible
    for (size_t i = 0; i < gb.elements().size(); ++i) {
      const Polynomial& g = gb.elements()[i];
      CHECK(leading_term(g, ord)->second.is_one());
      for (size_t j = 0; j < gb.elements().size(); ++j) {
        if (i == j) continue;
        const Monomial& lj = leading_term(gb.elements()[j], ord)->first;
        for (const auto& [m, c] : g.terms()) CHECK(!divides(lj, m));
      }
    }

    // Buchberger criterion on the returned basis
    for (size_t i = 0; i < gb.elements().size(); ++i)
      for (size_t j = i + 1; j < gb.elements().size(); ++j)
        CHECK(normal_form(s_polynomial(gb.elements()[i], gb.elements()[j], ord), gb)
                  .is_zero());

    // every generator reduces to zero
    for (const auto& g : ideal.gens) CHECK(normal_form(g, gb).is_zero());

    // idempotence and the division identity p - nf(p) in the ideal
    Polynomial p = testutil::random_poly(ideal.ring, rng, 4, 3);
    Polynomial nf = normal_form(p, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(is_member(p - nf, ideal));
  }
}

TEST_CASE("reduced basis is independent of generator order and scaling") {
  for (unsigned seed = 100; seed < 120; ++seed) {
    std::mt19937 rng(seed);
    Ideal ideal = random_small_ideal(rng);
    GroebnerBasis gb = groebner_basis(ideal);

    std::vector<Polynomial> shuffled = ideal.gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g = random_nonzero_rational(rng) * g;
    GroebnerBasis gb2 = groebner_basis(Ideal(ideal.ring, shuffled));

    CHECK(sorted_elements(gb) == sorted_elements(gb2));
  }
}
