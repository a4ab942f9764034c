#pragma once

#include <string>

#include "slicegb/parser.hpp"
#include "slicegb/polynomial.hpp"

namespace slicegb {

/// Element of Q(a1..am) as num/den in lowest terms: gcd(num, den) = 1 and den
/// monic under DegRevLex on the parameter ring. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(const Ring& ring, const Rational& c) : RationalFunction(Polynomial(ring, c)) {}

  const Ring& ring() const noexcept { return num_.ring(); }
  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// A constant of Q.
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// The rational value of a constant function.
  Rational constant_value() const;
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// Value at a point; throws DenominatorVanishes if den(point) = 0.
  Rational evaluate(std::span<const Rational> point) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline bool coeff_is_zero(const RationalFunction& q) { return q.is_zero(); }
RationalFunction inverse(const RationalFunction& q);
RationalFunction unit_like(const RationalFunction& q);
inline bool is_constant_coeff(const RationalFunction& q) { return q.is_constant(); }

/// "p" for polynomials, "p/q" otherwise, multi-term parts in parentheses.
std::string to_string(const RationalFunction& q);
CoeffText coeff_text(const RationalFunction& q);

/// Polynomial in x with coefficients in Q(a).
using ParamPolynomial = BasicPolynomial<RationalFunction>;

}  // namespace slicegb
