#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/rational.hpp"

namespace gradus {

/// Dense univariate polynomial over Q, ascending coefficients, trailing
/// zeros trimmed. The zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& constant);  // NOLINT: constants embed
  UniPoly(long constant) : UniPoly(Rational(constant)) {}
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly monomial(const Rational& c, int degree);

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const {
    return k >= 0 && k < int(c_.size()) ? c_[k] : Rational(0);
  }
  Rational constant_term() const { return coeff(0); }
  Rational leading_coeff() const { return is_zero() ? Rational(0) : c_.back(); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);

  UniPoly shifted(int k) const;  // * T^k
  UniPoly pow(uint64_t n) const;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// a / b when the division is exact, nullopt otherwise.
  static std::optional<UniPoly> exact_div(const UniPoly& a, const UniPoly& b);
  /// Monic gcd (zero if both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Compact ascending form, e.g. "1+2*T+4*T^2" or "1-T^2"; "0" when zero.
  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// 1 - T^d
UniPoly one_minus_power(int d);

}  // namespace gradus
