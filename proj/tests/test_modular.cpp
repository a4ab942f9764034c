#include <algorithm>

#include "doctest.h"
#include "slicegb/groebner.hpp"
#include "slicegb/modular.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<TermOrder> orders(std::size_t n) {
  return {TermOrder::lex(n), TermOrder::deglex(n), TermOrder::degrevlex(n), TermOrder::xi_degrev(n, 0),
          TermOrder::elimination(n, 1)};
}

}  // namespace

TEST_CASE("modular arithmetic agrees with integer arithmetic") {
  Gen gen(401);
  for (std::size_t k : {0u, 1u, 7u, 100u}) {
    const std::uint32_t p = nth_large_prime(k);
    for (int it = 0; it < 200; ++it) {
      const Integer a = gen.integer(0, 1 << 30) * Integer(gen.integer(0, 1 << 30));
      const Integer b = gen.integer(1, 1 << 30);
      const Modular ma(mpz_fdiv_ui(a.get_mpz_t(), p), p);
      const Modular mb(mpz_fdiv_ui(b.get_mpz_t(), p), p);
      auto mod = [&](const Integer& x) { return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), p)); };
      CHECK((ma + mb).value() == mod(a + b));
      CHECK((ma - mb).value() == mod(a - b));
      CHECK((ma * mb).value() == mod(a * b));
      CHECK((-ma).value() == mod(-a));
      if (mb.value() != 0) CHECK((mb * mb.inverse()).value() == 1u);
    }
  }
  CHECK_THROWS_AS(Modular(0, 7).inverse(), std::domain_error);
}

TEST_CASE("large primes are prime, distinct and below 2^31") {
  std::uint32_t last = 1u << 31;
  for (std::size_t k = 0; k < 50; ++k) {
    const std::uint32_t p = nth_large_prime(k);
    CHECK(p < last);
    last = p;
    bool prime = p > 1;
    for (std::uint32_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    CHECK(prime);
  }
  CHECK(nth_large_prime(0) == 2147483647u);
}

TEST_CASE("reduction modulo p") {
  CHECK(reduce_mod(Rational(3, 4), 7)->value() == 6u);
  CHECK(reduce_mod(Rational(-1, 2), 5)->value() == 2u);
  CHECK_FALSE(reduce_mod(Rational(1, 14), 7).has_value());
  const Ring r = ring("QQ[x,y]");
  const auto f = reduce_mod(poly(r, "7*x^2 + 1/3*y - 1"), 7);
  REQUIRE(f.has_value());
  CHECK(f->size() == 2);
  CHECK_FALSE(reduce_mod(poly(r, "1/7*x + y"), 7).has_value());
}

TEST_CASE("property: rational reconstruction recovers small fractions") {
  Gen gen(402);
  const Integer m = Integer(nth_large_prime(0)) * nth_large_prime(1);
  for (int it = 0; it < 300; ++it) {
    const Rational q = gen.rational(1 << 20, 1 << 20);
    // u = num * den^-1 mod m
    Integer inv;
    REQUIRE(mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) != 0);
    Integer u = q.get_num() * inv % m;
    if (u < 0) u += m;
    const auto back = rational_reconstruction(u, m);
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
  // Too little modulus for the size of the fraction.
  const Integer small = 101;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(97).get_mpz_t(), small.get_mpz_t());
  const auto r = rational_reconstruction(Integer(89) * inv % small, small);
  CHECK((!r || *r != Rational(89, 97)));
}

TEST_CASE("modular bases of trivial ideals") {
  const Ring r = ring("QQ[x,y]");
  const TermOrder o = TermOrder::degrevlex(2);
  CHECK(modular_groebner_basis(o, Ideal(r)).elements.empty());
  const auto unit = modular_groebner_basis(o, Ideal(r, polys(r, {"x*y - 1", "x", "y^2 + 3"})));
  CHECK(unit.is_unit());
  GroebnerOptions late;
  late.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(modular_groebner_basis(o, Ideal(r, polys(r, {"x^2 - y"})), late), ResourceLimit);
}

TEST_CASE("modular basis with large coefficients") {
  const Ring r = ring("QQ[x,y,z]");
  const Ideal i(r, polys(r, {"123456789012345678901*x^2 - 98765432109876543210/7*y*z + 1",
                             "y^3 - 31415926535897932384626*x*z + 2/3", "z^2 - 27182818284590452353*x + y"}));
  for (const auto& o : orders(3)) CHECK(modular_groebner_basis(o, i).elements == groebner_basis(o, i).elements);
}

TEST_CASE("property: modular bases equal exact bases") {
  Gen gen(403);
  const Ring r = ring("QQ[x,y,z]");
  for (int it = 0; it < 40; ++it) {
    std::vector<Polynomial> gens;
    const int count = gen.integer(1, 3);
    for (int k = 0; k < count; ++k) gens.push_back(gen.polynomial(r, 4, 3, 50, 9));
    const Ideal i(r, gens);
    for (const auto& o : orders(3)) {
      const auto exact = groebner_basis(o, i);
      const auto modular = modular_groebner_basis(o, i);
      CHECK(modular.elements == exact.elements);
      CHECK(modular.is_reduced);
    }
  }
}

TEST_CASE("property: modular elimination equals exact elimination") {
  Gen gen(404);
  const Ring r = ring("QQ[s,t,x,y]");
  for (int it = 0; it < 25; ++it) {
    std::vector<Polynomial> gens{poly(r, "x") - gen.polynomial(ring("QQ[s,t,x,y]"), 3, 2, 5, 3),
                                 poly(r, "y") - gen.polynomial(r, 3, 2, 5, 3), gen.polynomial(r, 2, 2, 5, 3)};
    const Ideal i(r, gens);
    const std::vector<std::size_t> drop{0, 1};
    GroebnerOptions modular;
    modular.modular = true;
    CHECK(eliminate(i, drop, modular).generators() == eliminate(i, drop).generators());
  }
}
