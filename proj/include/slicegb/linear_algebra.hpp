#pragma once

#include <cstddef>
#include <vector>

#include "slicegb/rational.hpp"

namespace slicegb {

/// Dense row-major matrix over Q.
using Matrix = std::vector<std::vector<Rational>>;

/// Solution set of A x = b.
struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;         // valid when consistent
  std::vector<std::vector<Rational>> kernel;  // basis of the null space of A
  std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination. `columns` is the number of unknowns (rows
/// may be empty). Free variables are set to zero in the particular solution.
LinearSolution solve_linear(Matrix a, std::vector<Rational> b, std::size_t columns);

}  // namespace slicegb
