#include "gradus/ring.hpp"

#include <algorithm>
#include <utility>

namespace gradus {

Ring::Ring(RingSpec spec) {
  auto impl = std::make_shared<Impl>();
  for (size_t i = 0; i < spec.vars.size(); ++i) {
    const VarSpec& v = spec.vars[i];
    if (v.name.empty()) throw RingError("variable with empty name");
    if (v.weight < 1)
      throw RingError("variable '" + v.name + "' has weight " +
                      std::to_string(v.weight) + "; weights must be >= 1");
    if (!impl->index.emplace(v.name, i).second)
      throw RingError("duplicate variable name '" + v.name + "'");
    if (v.parity == Parity::Odd) impl->has_odd = true;
  }
  impl->spec = std::move(spec);
  impl_ = std::move(impl);
}

std::optional<size_t> Ring::index_of(const std::string& name) const {
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

int64_t weighted_degree(const Ring& ring, const Monomial& m) {
  int64_t d = 0;
  for (size_t i = 0; i < m.nvars(); ++i) d += int64_t(m.exp(i)) * ring.var(i).weight;
  return d;
}

int odd_count(const Ring& ring, const Monomial& m) {
  int n = 0;
  for (size_t i = 0; i < m.nvars(); ++i)
    if (ring.var(i).parity == Parity::Odd && m.exp(i) > 0) ++n;
  return n;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.nvars(); ++i)
    if (a.exp(i) > b.exp(i)) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  std::vector<int> e(b.nvars());
  for (size_t i = 0; i < b.nvars(); ++i) e[i] = b.exp(i) - a.exp(i);
  return Monomial(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
  return Monomial(std::move(e));
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (size_t i = 0; i < a.nvars(); ++i) e[i] = std::min(a.exp(i), b.exp(i));
  return Monomial(std::move(e));
}

bool disjoint_support(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.nvars(); ++i)
    if (a.exp(i) > 0 && b.exp(i) > 0) return false;
  return true;
}

std::optional<GradedProduct> graded_product(const Ring& ring, const Monomial& a,
                                            const Monomial& b) {
  const size_t n = ring.size();
  std::vector<int> e(n);
  int sign = 1;
  // Sorting the concatenation a|b into variable order moves each odd factor
  // of b past every odd factor of a with a larger index; each such
  // transposition of two odd variables contributes -1.
  for (size_t j = 0; j < n; ++j) {
    e[j] = a.exp(j) + b.exp(j);
    if (ring.var(j).parity == Parity::Odd) {
      if (e[j] > 1) return std::nullopt;  // odd square vanishes
      if (b.exp(j) == 1) {
        int above = 0;
        for (size_t i = j + 1; i < n; ++i)
          if (ring.var(i).parity == Parity::Odd && a.exp(i) == 1) ++above;
        if (above % 2 == 1) sign = -sign;
      }
    }
  }
  return GradedProduct{Monomial(std::move(e)), sign};
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.emplace(Monomial::one(ring.size()), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, size_t index) {
  if (index >= ring.size()) throw RingError("variable index out of range");
  std::vector<int> e(ring.size(), 0);
  e[index] = 1;
  Polynomial p(ring);
  p.terms_.emplace(Monomial(std::move(e)), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Rational& c) {
  if (m.nvars() != ring.size())
    throw RingError("monomial arity does not match the ring");
  for (size_t i = 0; i < ring.size(); ++i) {
    if (m.exp(i) < 0) throw RingError("negative exponent");
    if (ring.var(i).parity == Parity::Odd && m.exp(i) > 1)
      throw RingError("odd variable '" + ring.var(i).name +
                      "' with exponent >= 2 has no canonical form");
  }
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return {Degree::Kind::Zero, 0};
  int64_t d = weighted_degree(ring_, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(ring_, m) != d) return {Degree::Kind::Inhomogeneous, 0};
  return {Degree::Kind::Homogeneous, d};
}

Polynomial Polynomial::graded_component(int64_t d) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(ring_, m) == d) out.terms_.emplace(m, c);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!ring_.same(o.ring_)) throw RingError("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = graded_product(a.ring_, ma, mb);
      if (!prod) continue;
      Rational c = ca * cb;
      if (prod->sign < 0) c = -c;
      out.add_term(prod->mono, c);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.ring_);
  if (c.is_zero()) return out;
  for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
  return out;
}

Polynomial Polynomial::pow(uint64_t n) const {
  Polynomial result = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace gradus
