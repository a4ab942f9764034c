#include "slicegb/linear_algebra.hpp"

#include <stdexcept>

namespace slicegb {

LinearSolution solve_linear(Matrix a, std::vector<Rational> b, std::size_t columns) {
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch");
  for (const auto& row : a)
    if (row.size() != columns) throw std::invalid_argument("column count mismatch");
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < columns; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < columns; ++k)
        if (sgn(a[r][k]) != 0) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution sol;
  sol.rank = r;
  sol.consistent = true;
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) sol.consistent = false;
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  if (sol.consistent) {
    sol.particular.assign(columns, Rational(0));
    for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_col[i]] = b[i];
  }
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][f];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace slicegb
