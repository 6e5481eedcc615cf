#include "gradus/series.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "gradus/errors.hpp"
#include "gradus/lexer.hpp"

namespace gradus {

namespace {

UniPoly expand_factors(const std::map<int, int>& factors) {
  UniPoly out{Rational(1)};
  for (const auto& [d, m] : factors) out = out * one_minus_power(d).pow(uint64_t(m));
  return out;
}

// Factor P as c * prod (1-T^d)^m * remainder with remainder(0) normalized
// to 1 when nonzero. Largest d first; on a true product of such factors the
// remainder comes out constant.
struct Factored {
  Rational scale{1};
  std::map<int, int> factors;
  UniPoly remainder{Rational(1)};
};

Factored recognize_factors(UniPoly p) {
  Factored out;
  if (p.is_zero()) throw SeriesError("cannot factor the zero polynomial");
  for (int d = p.degree(); d >= 1; --d) {
    for (;;) {
      if (d > p.degree()) break;
      auto q = UniPoly::exact_div(p, one_minus_power(d));
      if (!q) break;
      p = *q;
      out.factors[d] += 1;
    }
  }
  Rational c0 = p.constant_term();
  if (p.is_constant()) {
    out.scale = c0;
    return out;
  }
  if (!c0.is_zero()) {
    out.scale = c0;
    out.remainder = c0.inv() * p;
  } else {
    out.remainder = p;  // vanishes at T=0; the series is not expandable
  }
  return out;
}

}  // namespace

RationalSeries::RationalSeries(const UniPoly& numerator) : num_(numerator) {}

RationalSeries::RationalSeries(UniPoly numerator, std::map<int, int> factors, UniPoly extra)
    : num_(std::move(numerator)), den_(std::move(factors)), extra_(std::move(extra)) {
  if (extra_.is_zero()) throw SeriesError("zero denominator");
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->first < 1) throw SeriesError("denominator factor with exponent d < 1");
    if (it->second < 0) throw SeriesError("negative factor multiplicity");
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  if (num_.is_zero()) {
    den_.clear();
    extra_ = UniPoly(Rational(1));
  }
}

bool RationalSeries::expandable() const {
  return !extra_.constant_term().is_zero();
}

UniPoly RationalSeries::denominator_expanded() const {
  return expand_factors(den_) * extra_;
}

RationalSeries series_neg(const RationalSeries& a) {
  return RationalSeries(-a.numerator(), a.factors(), a.extra_denominator());
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::map<int, int> den = a.factors();
  for (const auto& [d, m] : b.factors()) den[d] = std::max(den[d], m);
  std::map<int, int> missing_a = den, missing_b = den;
  for (const auto& [d, m] : a.factors()) missing_a[d] -= m;
  for (const auto& [d, m] : b.factors()) missing_b[d] -= m;
  UniPoly na = a.numerator() * expand_factors(missing_a);
  UniPoly nb = b.numerator() * expand_factors(missing_b);
  UniPoly extra = a.extra_denominator();
  if (a.extra_denominator() == b.extra_denominator()) {
    return RationalSeries(na + nb, std::move(den), extra);
  }
  na = na * b.extra_denominator();
  nb = nb * a.extra_denominator();
  return RationalSeries(na + nb, std::move(den), extra * b.extra_denominator());
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  return series_add(a, series_neg(b));
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  if (a.is_zero() || b.is_zero()) return RationalSeries();
  std::map<int, int> den = a.factors();
  for (const auto& [d, m] : b.factors()) den[d] += m;
  return RationalSeries(a.numerator() * b.numerator(), std::move(den),
                        a.extra_denominator() * b.extra_denominator());
}

RationalSeries series_div(const RationalSeries& a, const RationalSeries& b) {
  if (b.is_zero()) throw SeriesError("division by the zero series");
  if (a.is_zero()) return RationalSeries();
  // reciprocal of b: denominator becomes numerator, numerator is factored
  // back into (1-T^d) shape where possible
  Factored f = recognize_factors(b.numerator());
  RationalSeries recip(f.scale.inv() * b.denominator_expanded(), f.factors, f.remainder);
  return series_mul(a, recip);
}

RationalSeries series_shift(const RationalSeries& a, int k) {
  return RationalSeries(a.numerator().shifted(k), a.factors(), a.extra_denominator());
}

bool series_eq(const RationalSeries& a, const RationalSeries& b) {
  return a.numerator() * b.denominator_expanded() ==
         b.numerator() * a.denominator_expanded();
}

std::vector<Rational> series_expand(const RationalSeries& a, int n) {
  if (!a.expandable())
    throw SeriesError("denominator vanishes at T=0; series has no expansion");
  UniPoly den = a.denominator_expanded();
  const Rational d0_inv = den.constant_term().inv();
  std::vector<Rational> c(size_t(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    Rational acc = a.numerator().coeff(k);
    for (int j = 1; j <= std::min(k, den.degree()); ++j)
      acc -= den.coeff(j) * c[size_t(k - j)];
    c[size_t(k)] = acc * d0_inv;
  }
  return c;
}

bool series_leq(const RationalSeries& a, const RationalSeries& b, int n) {
  std::vector<Rational> ca = series_expand(a, n);
  std::vector<Rational> cb = series_expand(b, n);
  for (int i = 0; i <= n; ++i)
    if (ca[size_t(i)] > cb[size_t(i)]) return false;
  return true;
}

RationalSeries series_reduce(const RationalSeries& a) {
  if (a.is_zero()) return RationalSeries();
  UniPoly num = a.numerator();
  std::map<int, int> den = a.factors();
  UniPoly extra = a.extra_denominator();

  // exact division by whole (1-T^d) factors, largest d first
  for (auto it = den.rbegin(); it != den.rend(); ++it) {
    while (it->second > 0) {
      auto q = UniPoly::exact_div(num, one_minus_power(it->first));
      if (!q) break;
      num = *q;
      it->second -= 1;
    }
  }
  for (auto it = den.begin(); it != den.end();)
    it = it->second == 0 ? den.erase(it) : std::next(it);

  // gcd cancellation against the remaining denominator, re-expressed in
  // factor form where possible
  UniPoly d_exp = expand_factors(den) * extra;
  UniPoly g = UniPoly::gcd(num, d_exp);
  if (g.degree() >= 1) {
    num = *UniPoly::exact_div(num, g);
    d_exp = *UniPoly::exact_div(d_exp, g);
    Factored f = recognize_factors(d_exp);
    den = std::move(f.factors);
    extra = std::move(f.remainder);
    num = f.scale.inv() * num;
  } else if (extra.is_constant()) {
    num = extra.constant_term().inv() * num;
    extra = UniPoly(Rational(1));
  } else {
    Rational c0 = extra.constant_term();
    if (!c0.is_zero() && !c0.is_one()) {
      num = c0.inv() * num;
      extra = c0.inv() * extra;
    }
  }
  return RationalSeries(std::move(num), std::move(den), std::move(extra));
}

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) : ts_(text) {}

  RationalSeries parse() {
    RationalSeries s = expr();
    if (!ts_.at_end()) ts_.fail("trailing input");
    return s;
  }

 private:
  RationalSeries expr() {
    RationalSeries acc = term();
    for (;;) {
      if (ts_.accept(Tok::Plus)) {
        acc = series_add(acc, term());
      } else if (ts_.accept(Tok::Minus)) {
        acc = series_sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  RationalSeries term() {
    RationalSeries acc = factor();
    for (;;) {
      if (ts_.accept(Tok::Star)) {
        acc = series_mul(acc, factor());
      } else if (ts_.accept(Tok::Slash)) {
        acc = series_div(acc, factor());
      } else {
        return acc;
      }
    }
  }

  RationalSeries factor() {
    if (ts_.accept(Tok::Minus)) return series_neg(factor());
    RationalSeries b = base();
    if (ts_.accept(Tok::Caret)) {
      Token e = ts_.expect(Tok::Int, "a nonnegative integer exponent");
      uint64_t n = std::stoull(e.text);
      RationalSeries acc{UniPoly(Rational(1))};
      for (uint64_t i = 0; i < n; ++i) acc = series_mul(acc, b);
      return acc;
    }
    return b;
  }

  RationalSeries base() {
    Token t;
    if (ts_.accept(Tok::Int, &t))
      return RationalSeries(UniPoly(Rational::parse(t.text)));
    if (ts_.accept(Tok::Ident, &t)) {
      if (t.text == "T") return RationalSeries(UniPoly::monomial(Rational(1), 1));
      throw ParseError("unknown symbol '" + t.text + "' (series use the variable T)",
                       t.pos);
    }
    if (ts_.accept(Tok::LParen)) {
      RationalSeries s = expr();
      ts_.expect(Tok::RParen, "')'");
      return s;
    }
    ts_.fail("expected a number, 'T', or '('");
  }

  TokenStream ts_;
};

}  // namespace

RationalSeries parse_series(std::string_view text) { return SeriesParser(text).parse(); }

std::string print_series(const RationalSeries& a) {
  std::string num = a.numerator().str();
  if (a.factors().empty() && a.extra_denominator() == UniPoly(Rational(1))) return num;
  std::string den;
  for (const auto& [d, m] : a.factors()) {
    if (!den.empty()) den += "*";
    den += d == 1 ? "(1-T)" : "(1-T^" + std::to_string(d) + ")";
    den += "^" + std::to_string(m);
  }
  if (!(a.extra_denominator() == UniPoly(Rational(1)))) {
    if (!den.empty()) den += "*";
    den += "(" + a.extra_denominator().str() + ")";
  }
  bool wrap = a.numerator().degree() > 0 || num.find('+') != std::string::npos ||
              num.rfind('-') != std::string::npos;
  std::string left = wrap ? "(" + num + ")" : num;
  return left + "/(" + den + ")";
}

}  // namespace gradus
