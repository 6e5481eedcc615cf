#pragma once

#include <vector>

#include "gradus/order.hpp"
#include "gradus/ring.hpp"

namespace gradus {

/// Finitely generated ideal in an all-even ring. Generators may be zero
/// (ignored downstream); homogeneity is enforced only where required
/// (Hilbert series).
struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;

  Ideal(Ring r, std::vector<Polynomial> g);
};

/// Reduced Groebner basis for a fixed monomial order: every element monic,
/// no monomial of any element divisible by another element's leading
/// monomial. Immutable once computed.
class GroebnerBasis {
 public:
  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }

 private:
  friend GroebnerBasis groebner_basis(const Ideal&, MonomialOrder);
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first) and the product and chain pair criteria, followed by
/// interreduction. Throws RingError if the ring has odd variables.
GroebnerBasis groebner_basis(const Ideal& ideal,
                             MonomialOrder order = MonomialOrder(OrderKind::GrevLex));

/// Complete multivariate division remainder: no monomial of the result is
/// divisible by any leading monomial of gb, and p - result lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// S-polynomial of f and g (exposed for basis audits).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

bool is_member(const Polynomial& p, const Ideal& ideal);

}  // namespace gradus
