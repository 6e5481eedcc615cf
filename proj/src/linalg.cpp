#include "gradus/linalg.hpp"

#include <map>
#include <utility>

namespace gradus {

size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = rows[rank][col].inv();
    for (size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

size_t rank_of_span(const std::vector<Polynomial>& ps) {
  if (ps.empty()) return 0;
  const Ring& ring = ps[0].ring();
  std::map<Monomial, size_t> columns;
  for (const auto& p : ps) {
    if (!p.ring().same(ring)) throw RingError("polynomials belong to different rings");
    for (const auto& [m, c] : p.terms()) columns.emplace(m, 0);
  }
  if (columns.empty()) return 0;  // all zero
  size_t k = 0;
  for (auto& [m, idx] : columns) idx = k++;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(ps.size());
  for (const auto& p : ps) {
    std::vector<Rational> row(columns.size());
    for (const auto& [m, c] : p.terms()) row[columns.at(m)] = c;
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

}  // namespace gradus
