#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradus/errors.hpp"
#include "gradus/rational.hpp"

namespace gradus {

enum class Parity { Even, Odd };

struct VarSpec {
  std::string name;
  int weight = 1;  // grading degree, >= 1
  Parity parity = Parity::Even;

  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

struct RingSpec {
  std::vector<VarSpec> vars;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Immutable ring context: a fixed ordered list of weighted, even or odd
/// variables. Cheap to copy (shared handle); the variable order determines
/// canonical monomial form and the sign rule.
class Ring {
 public:
  /// Validates the spec: distinct names, every weight >= 1.
  explicit Ring(RingSpec spec);

  size_t size() const { return impl_->spec.vars.size(); }
  const VarSpec& var(size_t i) const { return impl_->spec.vars[i]; }
  const RingSpec& spec() const { return impl_->spec; }
  bool has_odd() const { return impl_->has_odd; }

  /// Index of a variable by name, or nullopt.
  std::optional<size_t> index_of(const std::string& name) const;

  /// Same ring: shared handle or an identical spec.
  bool same(const Ring& o) const {
    return impl_ == o.impl_ || impl_->spec == o.impl_->spec;
  }

 private:
  struct Impl {
    RingSpec spec;
    std::map<std::string, size_t> index;
    bool has_odd = false;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Exponent vector aligned with the ring's variable list. The comparison
/// operators give an arbitrary total order for container use only; monomial
/// *orderings* live in order.hpp.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}
  static Monomial one(size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  size_t nvars() const { return e_.size(); }
  int exp(size_t i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  bool is_one() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> e_;
};

int64_t weighted_degree(const Ring& ring, const Monomial& m);
int odd_count(const Ring& ring, const Monomial& m);

// Commutative monomial helpers (exponentwise); used by the Groebner engine
// on all-even rings.
bool divides(const Monomial& a, const Monomial& b);        // a | b
Monomial mono_quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool disjoint_support(const Monomial& a, const Monomial& b);

/// Product of two canonical monomials under the graded sign rule. Returns
/// nullopt when an odd variable reaches exponent 2 (the term vanishes);
/// otherwise the canonical product and the accumulated sign (+1 or -1),
/// one factor of -1 per transposition of two odd variables.
struct GradedProduct {
  Monomial mono;
  int sign = 1;
};
std::optional<GradedProduct> graded_product(const Ring& ring, const Monomial& a,
                                            const Monomial& b);

struct Degree {
  enum class Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Zero;
  int64_t value = 0;  // meaningful only when kind == Homogeneous
};

/// Sparse polynomial in canonical form: no zero coefficients, no odd
/// variable with exponent >= 2. Values are immutable in spirit; all
/// operations return new canonical polynomials.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, size_t index);
  /// Single term; throws RingError if the monomial is not canonical for the ring.
  static Polynomial term(const Ring& ring, const Monomial& m, const Rational& c);

  const Ring& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;

  /// Weighted degree: Zero for the zero polynomial, Homogeneous with the
  /// common degree, or Inhomogeneous.
  Degree degree() const;
  bool is_homogeneous() const { return degree().kind != Degree::Kind::Inhomogeneous; }

  /// Sum of the terms of weighted degree exactly d.
  Polynomial graded_component(int64_t d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  Polynomial pow(uint64_t n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_.same(b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  void require_same_ring(const Polynomial& o) const;

  Ring ring_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace gradus
