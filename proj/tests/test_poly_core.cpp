#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// DegRevLex straight from its definition: higher degree wins; on ties the
// term with the smaller exponent in the last differing variable wins.
std::strong_ordering drl_oracle(const PowerProduct& a, const PowerProduct& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.arity(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::vector<TermOrder> orders_for(std::size_t n) {
  std::vector<TermOrder> out{TermOrder::lex(n), TermOrder::deglex(n), TermOrder::degrevlex(n)};
  for (std::size_t p = 0; p < n; ++p) out.push_back(TermOrder::xi_degrev(n, p));
  for (std::size_t k = 1; k < n; ++k) out.push_back(TermOrder::elimination(n, k));
  return out;
}

PowerProduct var_pp(std::size_t n, std::size_t i) {
  PowerProduct p(n);
  p.set(i, 1);
  return p;
}

}  // namespace

TEST_CASE("term order examples") {
  const Ring r = ring("QQ[x,y,z]");
  const PowerProduct xz{1, 0, 1};
  const PowerProduct y2{0, 2, 0};
  CHECK(TermOrder::degrevlex(3).compare(xz, y2) < 0);
  CHECK(TermOrder::xi_degrev(3, 1).compare(xz, y2) > 0);
  for (const auto& o : orders_for(3)) CHECK(o.compare(xz, xz) == 0);
  CHECK_THROWS_AS(TermOrder::lex(2).compare(xz, y2), std::invalid_argument);
}

TEST_CASE("term order axioms on degree <= 4 in up to 4 variables") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto pps = all_power_products(n, 4);
    const auto small = all_power_products(n, 2);
    const PowerProduct one(n);
    for (const auto& o : orders_for(n)) {
      CAPTURE(n);
      CAPTURE(static_cast<int>(o.kind()));
      CAPTURE(o.parameter());
      bool ok = true;
      for (const auto& a : pps) {
        if (a != one && !(o.compare(a, one) > 0)) ok = false;
        for (const auto& b : pps) {
          const auto ab = o.compare(a, b);
          const auto ba = o.compare(b, a);
          if ((ab == 0) != (a == b)) ok = false;
          if ((ab > 0) != (ba < 0)) ok = false;
          if (ab > 0)
            for (const auto& s : small)
              if (!(o.compare(a * s, b * s) > 0)) ok = false;
        }
      }
      CHECK(ok);
      // Transitivity: sorting must produce a consistent chain.
      bool trans = true;
      for (const auto& a : pps)
        for (const auto& b : pps) {
          if (!(o.compare(a, b) > 0)) continue;
          for (const auto& c : pps)
            if (o.compare(b, c) > 0 && !(o.compare(a, c) > 0)) trans = false;
        }
      CHECK(trans);
      // Variable ranking: x1 > ... > xn, except that an x_i-DegRev pivot is
      // the smallest variable.
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (o.kind() == OrderKind::XiDegRev && (o.parameter() == i || o.parameter() == i + 1)) continue;
        CHECK(o.compare(var_pp(n, i), var_pp(n, i + 1)) > 0);
      }
      if (o.kind() == OrderKind::XiDegRev)
        for (std::size_t i = 0; i < n; ++i)
          if (i != o.parameter()) CHECK(o.compare(var_pp(n, i), var_pp(n, o.parameter())) > 0);
    }
  }
}

TEST_CASE("DegRevLex matches its definition and equals x_n-DegRev") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto pps = all_power_products(n, 4);
    const TermOrder drl = TermOrder::degrevlex(n);
    const TermOrder xin = TermOrder::xi_degrev(n, n - 1);
    bool ok = true;
    for (const auto& a : pps)
      for (const auto& b : pps) {
        if (drl.compare(a, b) != drl_oracle(a, b)) ok = false;
        if (xin.compare(a, b) != drl_oracle(a, b)) ok = false;
      }
    CHECK(ok);
  }
}

TEST_CASE("x_i-DegRev: smaller pivot exponent wins at equal degree") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t p = 0; p < n; ++p) {
      const TermOrder o = TermOrder::xi_degrev(n, p);
      CHECK(o.degree_compatible());
      const auto pps = all_power_products(n, 4);
      bool ok = true;
      for (const auto& a : pps)
        for (const auto& b : pps)
          if (a.degree() == b.degree() && a[p] < b[p] && !(o.compare(a, b) > 0)) ok = false;
      CHECK(ok);
    }
}

TEST_CASE("restricted ordering agrees with the ambient one on pivot-free terms") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& o : orders_for(n))
      for (std::size_t v = 0; v < n; ++v) {
        const TermOrder hat = o.restricted_without(v);
        CHECK(hat.arity() == n - 1);
        const auto pps = all_power_products(n - 1, 3);
        auto lift = [&](const PowerProduct& q) {
          PowerProduct out(n);
          for (std::size_t j = 0, k = 0; j < n; ++j)
            if (j != v) out.set(j, q[k++]);
          return out;
        };
        bool ok = true;
        for (const auto& a : pps)
          for (const auto& b : pps)
            if (hat.compare(a, b) != o.compare(lift(a), lift(b))) ok = false;
        CHECK(ok);
      }
}

TEST_CASE("leading monomials") {
  const Ring r = ring("QQ[x,y]");
  auto [c, t] = leading_monomial(TermOrder::degrevlex(2), poly(r, "x^2-y"));
  CHECK(c == 1);
  CHECK(t == PowerProduct{2, 0});
  auto [c5, t5] = leading_monomial(TermOrder::lex(2), poly(r, "5"));
  CHECK(c5 == 5);
  CHECK(t5.is_one());
  CHECK_THROWS_AS(leading_term(TermOrder::lex(2), Polynomial(r)), std::invalid_argument);

  const Ring r4 = ring("QQ[x0,x1,x2,x3]");
  const auto [c2, t2] = leading_monomial(TermOrder::xi_degrev(4, 0), poly(r4, "x2^3 - x1*x3*x0 - x2*x0^2"));
  CHECK(c2 == 1);
  CHECK(t2 == PowerProduct{0, 0, 3, 0});
}

TEST_CASE("polynomial arithmetic examples") {
  const Ring r = ring("QQ[x,y]");
  const Polynomial x = variable(r, 0);
  const Polynomial y = variable(r, 1);
  CHECK(pow(x + y, 2) == x * x + constant(r, 2) * x * y + y * y);
  CHECK((x - x).is_zero());
  const Polynomial one_minus_y = constant(r, 1) - y;
  CHECK(pow(y, 3) * pow(one_minus_y, 3) == poly(r, "y^3 - 3*y^4 + 3*y^5 - y^6"));
  CHECK_THROWS_AS(pow(x, -1), std::invalid_argument);
  const Ring other = ring("QQ[u,v]");
  CHECK_THROWS_AS(x + variable(other, 0), std::invalid_argument);
  CHECK(x.scaled(Rational(1, 2)) == poly(r, "1/2*x"));
}

TEST_CASE("substitute_var examples") {
  const Ring r = ring("QQ[x,y,z]");
  const Polynomial f = poly(r, "x^2+z^2 - y^3*(1-y)^3");
  CHECK(substitute_var(f, 1, constant(r, -5)) == poly(r, "x^2 + z^2 + 27000"));
  CHECK(substitute_var(f, 1, variable(r, 1)) == f);
  const Ring r4 = ring("QQ[x1,x2,x3,x4]");
  CHECK(substitute_var(poly(r4, "x1^3-2*x3^2"), 0, poly(r4, "x3+x4")) ==
        poly(r4, "x3^3+3*x3^2*x4+3*x3*x4^2+x4^3-2*x3^2"));
  CHECK_THROWS_AS(substitute_var(f, 3, f), std::invalid_argument);
}

TEST_CASE("degree_info examples") {
  const Ring r = ring("QQ[x1,x2,x3,x4]");
  auto d = degree_info(poly(r, "x2*x3 - x4"));
  CHECK(d.degree == 2);
  CHECK_FALSE(d.homogeneous);
  const Ring s = ring("QQ[x,y,z,w]");
  d = degree_info(poly(s, "z^2 - x*w"));
  CHECK(d.degree == 2);
  CHECK(d.homogeneous);
  d = degree_info(poly(s, "7"));
  CHECK(d.degree == 0);
  CHECK(d.homogeneous);
  CHECK_THROWS_AS(degree_info(Polynomial(s)), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  const Ring r = ring("QQ[a,b,c]");
  Gen gen(11);
  for (int it = 0; it < 200; ++it) {
    const Polynomial f = gen.polynomial(r, 5, 3);
    const Polynomial g = gen.polynomial(r, 5, 3);
    const Polynomial h = gen.polynomial(r, 5, 3);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    const std::size_t v = gen.index(3);
    const Polynomial s = gen.polynomial(r, 3, 2);
    CHECK(substitute_var(f * g, v, s) == substitute_var(f, v, s) * substitute_var(g, v, s));
    CHECK(substitute_var(f + g, v, s) == substitute_var(f, v, s) + substitute_var(g, v, s));
    for (const auto* p : {&f, &g, &h})
      for (const auto& t : p->terms()) {
        CHECK(t.coeff.get_den() > 0);
        Integer gcd_nd;
        mpz_gcd(gcd_nd.get_mpz_t(), t.coeff.get_num_mpz_t(), t.coeff.get_den_mpz_t());
        CHECK(gcd_nd == 1);
      }
  }
}

TEST_CASE("exact quotient and primitive normalization") {
  const Ring r = ring("QQ[x,y]");
  const Polynomial f = poly(r, "x^2 - y^2");
  CHECK(exact_quotient(f, poly(r, "x+y")) == poly(r, "x-y"));
  CHECK_FALSE(exact_quotient(f, poly(r, "x+2*y")).has_value());
  CHECK(primitive_normalized(TermOrder::degrevlex(2), poly(r, "-1/2*x + 3/4*y")) == poly(r, "2*x - 3*y"));
}

TEST_CASE("evaluation and composition") {
  const Ring r = ring("QQ[x,y]");
  const Polynomial f = poly(r, "x^2*y - 3*y + 1/2");
  const std::vector<Rational> pt{Rational(2), Rational(-1)};
  CHECK(evaluate(f, pt) == Rational(-1, 2));
  const Ring t = ring("QQ[s]");
  const std::vector<Polynomial> images{poly(t, "s"), poly(t, "s^2")};
  CHECK(compose(poly(r, "y - x^2"), images).is_zero());
}
