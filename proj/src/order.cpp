#include "gradus/order.hpp"

#include <algorithm>

namespace gradus {

std::optional<MonomialOrder> MonomialOrder::from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder(OrderKind::GrevLex);
  if (name == "lex") return MonomialOrder(OrderKind::Lex);
  return std::nullopt;
}

int MonomialOrder::compare(const Ring& ring, const Monomial& a, const Monomial& b) const {
  int64_t da = weighted_degree(ring, a);
  int64_t db = weighted_degree(ring, b);
  if (da != db) return da < db ? -1 : 1;
  const size_t n = a.nvars();
  if (kind_ == OrderKind::GrevLex) {
    // last nonzero exponent difference negative => greater
    for (size_t i = n; i-- > 0;) {
      int d = a.exp(i) - b.exp(i);
      if (d != 0) return d < 0 ? 1 : -1;
    }
  } else {
    for (size_t i = 0; i < n; ++i) {
      int d = a.exp(i) - b.exp(i);
      if (d != 0) return d > 0 ? 1 : -1;
    }
  }
  return 0;
}

const std::pair<const Monomial, Rational>* leading_term(const Polynomial& p,
                                                        MonomialOrder order) {
  const std::pair<const Monomial, Rational>* best = nullptr;
  for (const auto& term : p.terms()) {
    if (!best || order.less(p.ring(), best->first, term.first)) best = &term;
  }
  return best;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p,
                                                        MonomialOrder order) {
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    return order.less(p.ring(), y.first, x.first);
  });
  return terms;
}

}  // namespace gradus
