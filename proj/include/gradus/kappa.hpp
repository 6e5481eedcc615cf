#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradus/groebner.hpp"
#include "gradus/ring.hpp"

namespace gradus {

/// Formal twisted-kappa class k[a0,a1,a2] with a0 >= -1, a1 >= 0, a2 >= 0.
/// Weighted degree a0 + a1 + 2*a2; negative-degree symbols are identically
/// zero under rewriting.
struct KappaSymbol {
  int a0 = 0;
  int a1 = 0;
  int a2 = 0;

  KappaSymbol(int a0_, int a1_, int a2_);

  int64_t degree() const { return int64_t(a0) + a1 + 2 * int64_t(a2); }
  /// Positional name: "k010", "k-102", "k-130", ...
  std::string name() const;

  friend auto operator<=>(const KappaSymbol&, const KappaSymbol&) = default;
};

/// Rational linear combination of finite products of kappa symbols.
/// Canonical: products sorted, like terms merged, zero coefficients dropped.
class KappaExpression {
 public:
  using Product = std::vector<KappaSymbol>;

  KappaExpression() = default;  // zero
  static KappaExpression constant(const Rational& c);
  static KappaExpression atom(const KappaSymbol& s);

  const std::map<Product, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  KappaExpression operator-() const;
  KappaExpression& operator+=(const KappaExpression& o);
  KappaExpression& operator-=(const KappaExpression& o);
  friend KappaExpression operator+(KappaExpression a, const KappaExpression& b) {
    return a += b;
  }
  friend KappaExpression operator-(KappaExpression a, const KappaExpression& b) {
    return a -= b;
  }
  friend KappaExpression operator*(const KappaExpression& a, const KappaExpression& b);
  friend KappaExpression operator*(const Rational& c, const KappaExpression& e);
  KappaExpression pow(uint64_t n) const;

  friend bool operator==(const KappaExpression&, const KappaExpression&) = default;

  /// Weighted degree of the expression, via symbol degrees.
  Degree degree() const;

 private:
  void add_term(const Product& p, const Rational& c);
  std::map<Product, Rational> terms_;
};

struct RewriteOptions {
  /// k[i,m,n] -> 0 for all i >= vanish_threshold. 1 or 2.
  int vanish_threshold = 1;
  /// Enables k[-1,3,0] -> 1/4*k010*(6*k-120 - 9*k010), valid for bundle
  /// degree d = 3.
  bool enable_d3_kappa130 = false;
};

/// The fixed six-generator ring [k010:1, k001:2, k-101:1, k-120:1,
/// k-102:3, k-111:2]; shared instance, safe to compare polynomials against.
const Ring& kappa_generator_ring();

/// Rewrites every symbol into the six generators, recursively to fixpoint.
/// Residual opaque symbols (k[-1,m,0] for m >= 3 without the d=3 rule, and
/// k[1,m,n] under vanish_threshold = 2) are carried as extra ring variables
/// of weight equal to their degree.
Polynomial rewrite_to_generators(const KappaExpression& e, long d,
                                 const RewriteOptions& opts = {});

/// Names of residual variables beyond the six generators that occur in p.
std::vector<std::string> opaque_variables(const Polynomial& p);

/// The substituted generators x1, x2, x3 (degrees 1, 3, 2) in the fixed ring.
std::array<Polynomial, 3> x_generators(long d);

/// The ten substituted relations among x1, x2, x3.
std::vector<Polynomial> theorem_b_relations(long d);
Ideal theorem_b_ideal(long d);
/// Reduced Groebner basis of the ten relations; computed once per d and
/// cached immutably.
const GroebnerBasis& theorem_b_groebner(long d);

/// rewrite_to_generators followed by normal form modulo the ten relations.
/// Throws UnreducedSymbolError if any opaque symbol survives rewriting.
Polynomial kappa_normal_form(const KappaExpression& e, long d,
                             const RewriteOptions& opts = {});

// Individual rewrite rules, exposed for consistency audits. Each returns
// the right-hand side for the given symbol instance.
KappaExpression rule_weierstrass_product(int m, int n);          // k[0,m,n]
KappaExpression rule_second_chern_power(int n);                  // k[-1,0,n], n >= 2
KappaExpression rule_mixed_product(int m, int n, long d);        // k[-1,m,n], m,n >= 1

/// Kappa expression syntax: k[a0,a1,a2] atoms, generator names, rational
/// literals, + - * ^ and parentheses.
KappaExpression parse_kappa(std::string_view text);

}  // namespace gradus
