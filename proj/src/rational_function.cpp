#include "slicegb/rational_function.hpp"

#include <stdexcept>

#include "slicegb/errors.hpp"
#include "slicegb/poly_gcd.hpp"

namespace slicegb {

namespace {

TermOrder drl(const Ring& r) { return TermOrder::degrevlex(r.size()); }

Polynomial quotient(const Polynomial& f, const Polynomial& g) {
  auto q = exact_quotient(f, g);
  if (!q) throw std::logic_error("inexact division in rational function arithmetic");
  return *q;
}

bool is_one(const Polynomial& p) {
  return p.size() == 1 && p.terms().front().pp.is_one() && p.terms().front().coeff == 1;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(num_.ring(), Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ring(num_.ring(), den_.ring());
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.ring(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = polynomial_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = quotient(num_, g);
      den_ = quotient(den_, g);
    }
  }
  const Rational lc = leading_term(drl(den_.ring()), den_).coeff;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("not a constant");
  return num_.is_zero() ? Rational(0) : num_.terms().front().coeff;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = slicegb::evaluate(den_, point);
  if (sgn(d) == 0) throw DenominatorVanishes("denominator " + to_string(*this) + " vanishes at the point");
  return slicegb::evaluate(num_, point) / d;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (is_one(a.den_)) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Canonical{});
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  // Common denominator through the gcd of the denominators.
  const Polynomial g = polynomial_gcd(a.den_, b.den_);
  const Polynomial ad = quotient(a.den_, g);
  const Polynomial bd = quotient(b.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (is_one(a.den_) && is_one(b.den_))
    return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Canonical{});
  // Cross-cancel first; the result is then already in lowest terms.
  const Polynomial g1 = polynomial_gcd(a.num_, b.den_);
  const Polynomial g2 = polynomial_gcd(b.num_, a.den_);
  Polynomial num = quotient(a.num_, g1) * quotient(b.num_, g2);
  Polynomial den = quotient(a.den_, g2) * quotient(b.den_, g1);
  const Rational lc = leading_term(drl(den.ring()), den).coeff;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Canonical{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * inverse(b); }

RationalFunction inverse(const RationalFunction& q) {
  if (q.is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(q.denominator(), q.numerator());
}

RationalFunction unit_like(const RationalFunction& q) { return RationalFunction(q.ring(), Rational(1)); }

namespace {

std::string wrapped(const Polynomial& p) {
  const std::string s = print_polynomial(drl(p.ring()), p);
  return p.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const RationalFunction& q) {
  if (q.is_polynomial()) {
    const Rational d = q.denominator().terms().front().coeff;
    return print_polynomial(drl(q.ring()), q.numerator().scaled(1 / d));
  }
  return wrapped(q.numerator()) + "/" + wrapped(q.denominator());
}

CoeffText coeff_text(const RationalFunction& q) {
  if (q.is_constant()) return coeff_text(q.constant_value());
  CoeffText out;
  if (q.is_polynomial() && q.numerator().size() == 1) {
    const RationalFunction pos = sgn(q.numerator().terms().front().coeff) < 0 ? -q : q;
    out.negative = !(pos == q);
    out.magnitude = to_string(pos);
    return out;
  }
  out.magnitude = "(" + to_string(q) + ")";
  return out;
}

}  // namespace slicegb
