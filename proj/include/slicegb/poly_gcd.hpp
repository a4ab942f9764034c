#pragma once

#include "slicegb/polynomial.hpp"

namespace slicegb {

/// Greatest common divisor in Q[x1..xn], monic under DegRevLex. gcd(0, 0) = 0.
/// Recursive content / primitive-part pseudo-remainder sequences, one
/// variable at a time.
Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g);

/// Least common multiple, monic under DegRevLex; zero if either is zero.
Polynomial polynomial_lcm(const Polynomial& f, const Polynomial& g);

/// f viewed as a polynomial in x_var: coefficient of x_var^e is result[e]
/// (free of x_var, same ring).
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var);

}  // namespace slicegb
