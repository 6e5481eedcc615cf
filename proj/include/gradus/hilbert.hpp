#pragma once

#include <vector>

#include "gradus/groebner.hpp"
#include "gradus/series.hpp"

namespace gradus {

/// Hilbert-series numerator of R/M for a monomial ideal M, over the
/// standard denominator prod_i (1 - T^{w_i}). Computed by the colon-ideal
/// recursion N(M + (m)) = N(M) - T^{deg m} * N(M : m).
UniPoly hilbert_numerator(const Ring& ring, std::vector<Monomial> generators);

/// Hilbert series of ring/ideal: coefficient of T^d is the Q-dimension of
/// the degree-d graded piece. Unreduced: numerator over prod (1-T^{w_i}).
/// Requires an all-even ring and homogeneous generators.
RationalSeries hilbert_series(const Ideal& ideal,
                              MonomialOrder order = MonomialOrder(OrderKind::GrevLex));

}  // namespace gradus
