#include "gradus/unipoly.hpp"

#include <algorithm>

#include "gradus/errors.hpp"

namespace gradus {

UniPoly::UniPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  UniPoly p;
  if (!c.is_zero()) {
    p.c_.assign(size_t(degree) + 1, Rational(0));
    p.c_.back() = c;
  }
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  if (c.is_zero()) return UniPoly();
  UniPoly out = p;
  for (auto& x : out.c_) x *= c;
  return out;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> out(c_.size() + size_t(k), Rational(0));
  std::copy(c_.begin(), c_.end(), out.begin() + k);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(uint64_t n) const {
  UniPoly result{Rational(1)};
  UniPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error("univariate division by zero");
  UniPoly rem = a;
  UniPoly quot;
  const Rational lead_inv = b.leading_coeff().inv();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational f = rem.leading_coeff() * lead_inv;
    quot += UniPoly::monomial(f, shift);
    rem -= UniPoly::monomial(f, shift) * b;
  }
  return {quot, rem};
}

std::optional<UniPoly> UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.leading_coeff().inv() * a;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? "-" : "+";
    }
    if (k == 0) {
      out += a.str();
    } else {
      std::string tpart = k == 1 ? var : var + "^" + std::to_string(k);
      out += a.is_one() ? tpart : a.str() + "*" + tpart;
    }
  }
  return out;
}

UniPoly one_minus_power(int d) {
  std::vector<Rational> c(size_t(d) + 1, Rational(0));
  c[0] = Rational(1);
  c[size_t(d)] = Rational(-1);
  return UniPoly(std::move(c));
}

}  // namespace gradus
