#pragma once

#include <cstddef>
#include <vector>

#include "gradus/rational.hpp"
#include "gradus/ring.hpp"

namespace gradus {

/// Exact rank of a dense rational matrix by Gaussian elimination. All rows
/// must share one width; an empty matrix has rank 0.
size_t matrix_rank(std::vector<std::vector<Rational>> rows);

/// Dimension over Q of the span of the given polynomials, by exact
/// elimination on the coefficient matrix in the monomial basis.
size_t rank_of_span(const std::vector<Polynomial>& ps);

}  // namespace gradus
