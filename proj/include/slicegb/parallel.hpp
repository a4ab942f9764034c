#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <vector>

#include <omp.h>

#include "slicegb/rational.hpp"

namespace slicegb {

/// Runs f(0..count-1) on up to `jobs` threads and returns the results in
/// index order. jobs <= 1 runs serially. The first exception (by index) is
/// rethrown after the loop.
template <class F>
auto parallel_map(std::size_t count, int jobs, F&& f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 1 ? jobs : 1) if (jobs > 1)
  for (long k = 0; k < n; ++k) {
    try {
      slots[static_cast<std::size_t>(k)].emplace(f(static_cast<std::size_t>(k)));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Lagrange interpolation of many value rows over the same distinct nodes:
/// row r holds values at nodes[0..N-1]; the result row holds the coefficients
/// c_0..c_{N-1} (ascending powers) of the unique polynomial of degree < N.
std::vector<std::vector<Rational>> interpolate_rows_serial(std::span<const Rational> nodes,
                                                           const std::vector<std::vector<Rational>>& rows);
std::vector<std::vector<Rational>> interpolate_rows_parallel(std::span<const Rational> nodes,
                                                             const std::vector<std::vector<Rational>>& rows,
                                                             int jobs);

/// Coefficients (ascending) of the Lagrange basis polynomials for `nodes`.
std::vector<std::vector<Rational>> lagrange_basis(std::span<const Rational> nodes);

}  // namespace slicegb
