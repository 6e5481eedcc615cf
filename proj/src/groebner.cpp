#include "gradus/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace gradus {

namespace {

// coef * mono * p in an all-even ring
Polynomial shift(const Polynomial& p, const Monomial& mono, const Rational& coef) {
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(m.nvars());
    for (size_t i = 0; i < e.size(); ++i) e[i] = m.exp(i) + mono.exp(i);
    out += Polynomial::term(p.ring(), Monomial(std::move(e)), c * coef);
  }
  return out;
}

Polynomial make_monic(const Polynomial& p, MonomialOrder order) {
  const auto* lt = leading_term(p, order);
  if (!lt || lt->second.is_one()) return p;
  return lt->second.inv() * p;
}

// Full division remainder of p against the (monic) reducers.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& reducers,
                       MonomialOrder order) {
  Polynomial rem(p.ring());
  Polynomial work = p;
  while (!work.is_zero()) {
    const auto* lt = leading_term(work, order);
    bool reduced = false;
    for (const auto& g : reducers) {
      const auto* glt = leading_term(g, order);
      if (!glt || !divides(glt->first, lt->first)) continue;
      Monomial q = mono_quotient(lt->first, glt->first);
      work -= shift(g, q, lt->second / glt->second);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem += Polynomial::term(p.ring(), lt->first, lt->second);
      work -= Polynomial::term(p.ring(), lt->first, lt->second);
    }
  }
  return rem;
}

void require_even(const Ring& ring, const char* what) {
  if (ring.has_odd())
    throw RingError(std::string(what) + " requires a ring with no odd variables");
}

}  // namespace

Ideal::Ideal(Ring r, std::vector<Polynomial> g) : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& p : gens)
    if (!p.ring().same(ring)) throw RingError("ideal generator from a different ring");
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const auto* fl = leading_term(f, order);
  const auto* gl = leading_term(g, order);
  if (!fl || !gl) throw RingError("s-polynomial of a zero polynomial");
  Monomial l = mono_lcm(fl->first, gl->first);
  return shift(f, mono_quotient(l, fl->first), fl->second.inv()) -
         shift(g, mono_quotient(l, gl->first), gl->second.inv());
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
  require_even(ideal.ring, "a Groebner basis");
  const Ring& ring = ideal.ring;

  std::vector<Polynomial> basis;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) basis.push_back(make_monic(g, order));

  // Pair queue keyed by (lcm weighted degree, lcm, i, j): normal strategy.
  using PairKey = std::tuple<int64_t, Monomial, size_t, size_t>;
  std::set<PairKey> queue;
  std::set<std::pair<size_t, size_t>> treated;
  auto push_pairs = [&](size_t j) {
    const auto* lj = leading_term(basis[j], order);
    for (size_t i = 0; i < j; ++i) {
      const auto* li = leading_term(basis[i], order);
      Monomial l = mono_lcm(li->first, lj->first);
      queue.emplace(weighted_degree(ring, l), l, i, j);
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto [deg, l, i, j] = *queue.begin();
    queue.erase(queue.begin());
    treated.emplace(i, j);

    const Monomial& li = leading_term(basis[i], order)->first;
    const Monomial& lj = leading_term(basis[j], order)->first;
    if (disjoint_support(li, lj)) continue;  // product criterion
    bool chained = false;  // chain criterion
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!divides(leading_term(basis[k], order)->first, l)) continue;
      auto key = [&](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (treated.count(key(i, k)) && treated.count(key(j, k))) chained = true;
    }
    if (chained) continue;

    Polynomial h = reduce_full(s_polynomial(basis[i], basis[j], order), basis, order);
    if (h.is_zero()) continue;
    basis.push_back(make_monic(h, order));
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another element divides.
  std::vector<bool> alive(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    const Monomial& li = leading_term(basis[i], order)->first;
    for (size_t j = 0; j < basis.size() && alive[i]; ++j) {
      if (i == j || !alive[j]) continue;
      const Monomial& lj = leading_term(basis[j], order)->first;
      if (divides(lj, li) && (lj != li || j < i)) alive[i] = false;
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) minimal.push_back(basis[i]);

  // Tail-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = make_monic(reduce_full(minimal[i], others, order), order);
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(ring, leading_term(a, order)->first, leading_term(b, order)->first);
  });
  return GroebnerBasis(ring, order, std::move(minimal));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!p.ring().same(gb.ring())) throw RingError("polynomial from a different ring");
  return reduce_full(p, gb.elements(), gb.order());
}

bool is_member(const Polynomial& p, const Ideal& ideal) {
  return normal_form(p, groebner_basis(ideal)).is_zero();
}

}  // namespace gradus
