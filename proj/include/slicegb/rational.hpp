#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace slicegb {

/// Exact rational number. GMP keeps every result in canonical form
/// (gcd(num, den) = 1, den > 0, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }
inline Rational unit_like(const Rational&) { return Rational(1); }
inline bool is_constant_coeff(const Rational&) { return true; }

/// Parses "p", "-p" or "p/q" (decimal integers). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

}  // namespace slicegb
