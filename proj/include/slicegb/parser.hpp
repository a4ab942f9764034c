#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slicegb/errors.hpp"
#include "slicegb/polynomial.hpp"

namespace slicegb {

/// Parses a ring header "QQ[v1,...,vn]".
Ring parse_ring(std::string_view text);

/// Parses a polynomial over `ring`:
///
///   poly     := term (("+"|"-") term)*
///   term     := ["-"|"+"] factor ("*" factor)*
///   factor   := base ["^" nat]
///   base     := rational | var | "(" poly ")"
///   rational := int ["/" nat]
///
/// Juxtaposition is not multiplication and "/" is only allowed between
/// integer literals. Errors are ParseError with a span into `text`.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

/// Sign and magnitude of a coefficient as printed in front of a power product.
struct CoeffText {
  bool negative = false;
  std::string magnitude;  // without sign
  bool is_one = false;    // magnitude is exactly 1
};

CoeffText coeff_text(const Rational& c);

std::string format_power_product(const Ring& ring, const PowerProduct& pp);

/// Terms in sigma-decreasing order, e.g. "x^2 +2*x*y +y^2"; "0" for zero.
/// Byte-stable for a given polynomial and ordering.
template <class K>
std::string print_polynomial(const TermOrder& order, const BasicPolynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(order, f)) {
    const CoeffText c = coeff_text(t.coeff);
    if (first)
      out += c.negative ? "-" : "";
    else
      out += c.negative ? " -" : " +";
    first = false;
    if (t.pp.is_one()) {
      out += c.magnitude;
    } else {
      if (!c.is_one) out += c.magnitude + "*";
      out += format_power_product(f.ring(), t.pp);
    }
  }
  return out;
}

}  // namespace slicegb
