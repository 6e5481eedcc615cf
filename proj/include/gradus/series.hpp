#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradus/unipoly.hpp"

namespace gradus {

/// Generating function N(T) / (prod_d (1-T^d)^{m_d} * E(T)). The factor
/// multiset is the canonical denominator shape; E is an extra polynomial
/// factor that only appears through division or gcd cancellation and is 1
/// otherwise. Equality is value equality by cross-multiplication, not
/// syntactic identity.
class RationalSeries {
 public:
  RationalSeries() = default;  // zero
  RationalSeries(const UniPoly& numerator);  // NOLINT: polynomials embed
  RationalSeries(UniPoly numerator, std::map<int, int> factors,
                 UniPoly extra = UniPoly(1));

  const UniPoly& numerator() const { return num_; }
  const std::map<int, int>& factors() const { return den_; }
  const UniPoly& extra_denominator() const { return extra_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator does not vanish at T = 0, i.e. the series
  /// has a power-series expansion.
  bool expandable() const;

  UniPoly denominator_expanded() const;

 private:
  UniPoly num_;
  std::map<int, int> den_;   // d -> multiplicity, all >= 1
  UniPoly extra_{Rational(1)};
};

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
/// Throws SeriesError when b is the zero series.
RationalSeries series_div(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_neg(const RationalSeries& a);
/// Multiplication by T^k.
RationalSeries series_shift(const RationalSeries& a, int k);

/// Exact equality as rational functions.
bool series_eq(const RationalSeries& a, const RationalSeries& b);

/// Power-series coefficients alpha_0..alpha_n. Throws SeriesError if the
/// denominator vanishes at T = 0.
std::vector<Rational> series_expand(const RationalSeries& a, int n);

/// Coefficientwise alpha_i <= beta_i for 0 <= i <= n.
bool series_leq(const RationalSeries& a, const RationalSeries& b, int n);

/// Cancels common factors between numerator and denominator, re-expressing
/// the denominator as (1-T^d) factors where possible. Value-preserving and
/// idempotent.
RationalSeries series_reduce(const RationalSeries& a);

/// Series expressions over T with + - * / ^ and rational literals, e.g.
/// "(1+2*T)/((1-T)^2*(1-T^2))" or "T^2*(1+3*T)/((1-T)^2)".
RationalSeries parse_series(std::string_view text);

/// Canonical form: numerator in ascending powers, denominator factors
/// "(1-T^d)^m" sorted by d. A bare polynomial prints without a denominator.
std::string print_series(const RationalSeries& a);

}  // namespace gradus
