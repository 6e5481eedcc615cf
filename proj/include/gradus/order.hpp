#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/ring.hpp"

namespace gradus {

enum class OrderKind { GrevLex, Lex };

/// Total monomial order compatible with multiplication. Weighted degree is
/// the primary key; ties break reverse-lexicographically or
/// lexicographically along the ring's variable order.
class MonomialOrder {
 public:
  constexpr explicit MonomialOrder(OrderKind kind = OrderKind::GrevLex) : kind_(kind) {}

  OrderKind kind() const { return kind_; }
  const char* name() const { return kind_ == OrderKind::GrevLex ? "grevlex" : "lex"; }
  static std::optional<MonomialOrder> from_name(const std::string& name);

  /// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
  int compare(const Ring& ring, const Monomial& a, const Monomial& b) const;
  bool less(const Ring& ring, const Monomial& a, const Monomial& b) const {
    return compare(ring, a, b) < 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
};

/// Leading term of p under the order; nullptr for the zero polynomial.
const std::pair<const Monomial, Rational>* leading_term(const Polynomial& p,
                                                        MonomialOrder order);

/// Terms of p sorted descending under the order.
std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p,
                                                        MonomialOrder order);

}  // namespace gradus
