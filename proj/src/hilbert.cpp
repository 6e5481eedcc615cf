#include "gradus/hilbert.hpp"

#include <algorithm>
#include <utility>

namespace gradus {

namespace {

// Keep only minimal generators: drop duplicates and anything divisible by
// another generator.
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  gens = std::move(minimal);
}

UniPoly numerator_rec(const Ring& ring, std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return UniPoly(Rational(1));
  for (const auto& g : gens)
    if (g.is_one()) return UniPoly();

  // pairwise coprime generators split multiplicatively
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!disjoint_support(gens[i], gens[j])) coprime = false;
  if (coprime) {
    UniPoly out{Rational(1)};
    for (const auto& g : gens)
      out = out * one_minus_power(int(weighted_degree(ring, g)));
    return out;
  }

  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> e(g.nvars());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(g.exp(i) - pivot.exp(i), 0);
    colon.emplace_back(std::move(e));
  }
  UniPoly rest = numerator_rec(ring, std::move(gens));
  UniPoly quot = numerator_rec(ring, std::move(colon));
  return rest - quot.shifted(int(weighted_degree(ring, pivot)));
}

}  // namespace

UniPoly hilbert_numerator(const Ring& ring, std::vector<Monomial> generators) {
  return numerator_rec(ring, std::move(generators));
}

RationalSeries hilbert_series(const Ideal& ideal, MonomialOrder order) {
  const Ring& ring = ideal.ring;
  if (ring.has_odd())
    throw RingError("Hilbert series requires a ring with no odd variables");
  for (const auto& g : ideal.gens)
    if (g.degree().kind == Degree::Kind::Inhomogeneous)
      throw RingError("Hilbert series requires homogeneous ideal generators");

  GroebnerBasis gb = groebner_basis(ideal, order);
  std::vector<Monomial> lead;
  lead.reserve(gb.elements().size());
  for (const auto& g : gb.elements()) lead.push_back(leading_term(g, order)->first);

  UniPoly num = hilbert_numerator(ring, std::move(lead));
  std::map<int, int> den;
  for (size_t i = 0; i < ring.size(); ++i) den[ring.var(i).weight] += 1;
  return RationalSeries(std::move(num), std::move(den));
}

}  // namespace gradus
