#include "slicegb/parallel.hpp"

#include <stdexcept>

namespace slicegb {

std::vector<std::vector<Rational>> lagrange_basis(std::span<const Rational> nodes) {
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("interpolation nodes must be distinct");
  // prod_k (y - nodes[k]), ascending coefficients.
  std::vector<Rational> full{Rational(1)};
  for (const auto& g : nodes) {
    std::vector<Rational> next(full.size() + 1);
    for (std::size_t d = 0; d < full.size(); ++d) {
      next[d + 1] += full[d];
      next[d] -= g * full[d];
    }
    full = std::move(next);
  }
  std::vector<std::vector<Rational>> basis(n);
  for (std::size_t k = 0; k < n; ++k) {
    // full / (y - nodes[k]) by synthetic division.
    std::vector<Rational> q(n);
    Rational carry = 0;
    for (std::size_t d = n; d-- > 0;) {
      carry = full[d + 1] + carry * nodes[k];
      q[d] = carry;
    }
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) denom *= nodes[k] - nodes[j];
    const Rational inv = 1 / denom;
    for (auto& c : q) c *= inv;
    basis[k] = std::move(q);
  }
  return basis;
}

namespace {

std::vector<Rational> combine_row(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& row) {
  const std::size_t n = basis.size();
  if (row.size() != n) throw std::invalid_argument("row length does not match node count");
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(row[k]) == 0) continue;
    for (std::size_t d = 0; d < n; ++d) out[d] += row[k] * basis[k][d];
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> interpolate_rows_serial(std::span<const Rational> nodes,
                                                           const std::vector<std::vector<Rational>>& rows) {
  const auto basis = lagrange_basis(nodes);
  std::vector<std::vector<Rational>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(combine_row(basis, r));
  return out;
}

std::vector<std::vector<Rational>> interpolate_rows_parallel(std::span<const Rational> nodes,
                                                             const std::vector<std::vector<Rational>>& rows,
                                                             int jobs) {
  const auto basis = lagrange_basis(nodes);
  return parallel_map(rows.size(), jobs, [&](std::size_t r) { return combine_row(basis, rows[r]); });
}

}  // namespace slicegb
