#include <algorithm>
#include <map>

#include "doctest.h"
#include "slicegb/groebner.hpp"
#include "slicegb/linear_algebra.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::string> printed(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.elements) out.push_back(print_polynomial(gb.order, g));
  return out;
}

bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.elements.size() == b.elements.size() &&
         std::equal(a.elements.begin(), a.elements.end(), b.elements.begin());
}

bool contains(const GroebnerBasis& gb, const Polynomial& f) {
  return std::find(gb.elements.begin(), gb.elements.end(), f) != gb.elements.end();
}

// f = sum h_i g_i with deg(h_i) <= bound, decided by linear algebra over the
// coefficients of the h_i.
bool member_by_search(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned bound) {
  const Ring& r = f.ring();
  const auto mults = all_power_products(r.size(), bound);
  std::vector<Polynomial> columns;
  for (const auto& g : gens)
    for (const auto& m : mults) columns.push_back(g.times_term(m, Rational(1)));
  std::map<PowerProduct, std::size_t> row_of;
  auto row = [&](const PowerProduct& p) {
    auto [it, inserted] = row_of.emplace(p, row_of.size());
    return it->second;
  };
  for (const auto& c : columns)
    for (const auto& t : c.terms()) row(t.pp);
  for (const auto& t : f.terms()) row(t.pp);
  Matrix a(row_of.size(), std::vector<Rational>(columns.size()));
  std::vector<Rational> b(row_of.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms()) a[row_of[t.pp]][j] = t.coeff;
  for (const auto& t : f.terms()) b[row_of[t.pp]] = t.coeff;
  return solve_linear(std::move(a), std::move(b), columns.size()).consistent;
}

int dimension_by_subsets(std::size_t n, const std::vector<PowerProduct>& gens) {
  int best = -1;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    bool ok = true;
    for (const auto& g : gens)
      if ((g.support() & ~u) == 0) ok = false;
    if (ok) best = std::max(best, std::popcount(u));
  }
  return best;
}

std::vector<TermOrder> test_orders(std::size_t n) {
  return {TermOrder::degrevlex(n), TermOrder::lex(n), TermOrder::deglex(n), TermOrder::xi_degrev(n, 0)};
}

}  // namespace

TEST_CASE("normal form examples") {
  const Ring r = ring("QQ[x,y]");
  const TermOrder dl = TermOrder::deglex(2);
  const Polynomial f = poly(r, "x^2 - y");
  CHECK(normal_form<Rational>(dl, f, std::vector{f}).is_zero());
  CHECK(normal_form<Rational>(dl, poly(r, "x^3"), std::vector{f}) == poly(r, "x*y"));
  CHECK(normal_form<Rational>(dl, poly(r, "1"), polys(r, {"x"})) == poly(r, "1"));
  // Non-monic divisors are handled.
  CHECK(normal_form<Rational>(dl, poly(r, "x^3"), polys(r, {"2*x^2 - 2*y"})) == poly(r, "x*y"));
}

TEST_CASE("trivial bases") {
  const Ring r = ring("QQ[x,y]");
  const TermOrder o = TermOrder::degrevlex(2);
  auto gb = groebner_basis(o, Ideal(r, polys(r, {"x^2-y"})));
  CHECK(printed(gb) == std::vector<std::string>{"x^2 -y"});
  gb = groebner_basis(o, Ideal(r, polys(r, {"x", "x^2"})));
  CHECK(printed(gb) == std::vector<std::string>{"x"});
  gb = groebner_basis(o, Ideal(r, polys(r, {"x", "x-1"})));
  CHECK(printed(gb) == std::vector<std::string>{"1"});
  gb = groebner_basis(o, Ideal(r, polys(r, {"0"})));
  CHECK(gb.elements.empty());
  CHECK(gb.is_reduced);
}

TEST_CASE("reduced basis with a new element") {
  const Ring r = ring("QQ[x0,x1,x2,x3]");
  const TermOrder o = TermOrder::xi_degrev(4, 0);
  const auto gens = polys(r, {"x3^3-x1*x2*x0", "x2^3-x1*x3*x0-x2*x0^2", "x1^2*x2-x3*x0^2"});
  const auto gb = groebner_basis(o, Ideal(r, gens));
  CHECK(gb.elements.size() == 4);
  for (const auto& g : gens) CHECK(contains(gb, g));
  CHECK(contains(gb, poly(r, "x1^3*x3*x0-x2^2*x3*x0^2+x3*x0^4")));
}

TEST_CASE("reduced basis after a substitution touching leading terms") {
  const Ring r = ring("QQ[x1,x2,x3,x4]");
  const TermOrder o = TermOrder::degrevlex(4);
  const auto before = groebner_basis(o, Ideal(r, polys(r, {"x2*x3-x4", "x1^3-2*x3^2"})));
  CHECK(before.elements.size() == 2);
  const auto after =
      groebner_basis(o, Ideal(r, polys(r, {"x2*x3-x4", "(x3+x4)^3-2*x3^2"})));
  CHECK(after.elements.size() == 3);
  CHECK(contains(after, poly(r, "x2*x4^3+x3^2*x4+3*x3*x4^2+3*x4^3-2*x3*x4")));
}

TEST_CASE("reduced basis of the zero-divisor example") {
  const Ring r = ring("QQ[x1,x2,x3,x4]");
  const Ideal i(r, polys(r, {"x1^2", "x1*x3-x2", "x1*x4", "x4^2"}));
  for (const auto& o : {TermOrder::degrevlex(4), TermOrder::deglex(4)}) {
    const auto gb = groebner_basis(o, i);
    // x2*x4 = x3*(x1*x4) - x4*(x1*x3-x2) also belongs to the reduced basis.
    const auto expected = polys(r, {"x1^2", "x1*x3-x2", "x1*x4", "x4^2", "x1*x2", "x2^2", "x2*x4"});
    CHECK(gb.elements.size() == expected.size());
    for (const auto& e : expected) CHECK(contains(gb, e));
    CHECK(same_basis(reduce_basis(gb), gb));
  }
  CHECK(is_member(poly(r, "x1*(x2-x4)"), i, TermOrder::degrevlex(4)));
}

TEST_CASE("membership examples") {
  const Ring r = ring("QQ[x,y]");
  const Ideal i(r, polys(r, {"x", "y"}));
  CHECK(is_member(poly(r, "x"), i, TermOrder::lex(2)));
  CHECK_FALSE(is_member(poly(r, "1"), i, TermOrder::lex(2)));
}

TEST_CASE("elimination examples") {
  const Ring r = ring("QQ[a1,a2,x1,x2]");
  const Ideal i(r, polys(r, {"a1*x1 - a1", "a1*x2 - a2*x1 + a2"}));
  // Recomputed below from the family data; here the plain contract.
  const std::vector<std::size_t> drop{0, 1};
  const Ideal e = eliminate(i, drop);
  for (const auto& g : e.generators()) CHECK(is_member(rename_into(g, r), i, TermOrder::degrevlex(4)));

  const Ring s = ring("QQ[x,y,a1,a2]");
  const Ideal nd(s, polys(s, {"y^2-a1*y", "y^2-a2"}));
  const std::vector<std::size_t> xy{0, 1};
  const Ideal w = eliminate(nd, xy);
  REQUIRE(w.generators().size() == 1);
  const Ring a = ring("QQ[a1,a2]");
  CHECK(primitive_normalized(TermOrder::degrevlex(2), w.generators()[0]) ==
        primitive_normalized(TermOrder::degrevlex(2), poly(a, "a1^2*a2-a2^2")));

  const Ring t = ring("QQ[x,y]");
  const std::vector<std::size_t> dx{0};
  const Ideal k = eliminate(Ideal(t, polys(t, {"y^2-3"})), dx);
  REQUIRE(k.generators().size() == 1);
  CHECK(k.generators()[0] == poly(ring("QQ[y]"), "y^2-3"));
  const std::vector<std::size_t> all{0, 1};
  CHECK_THROWS_AS(eliminate(Ideal(t, polys(t, {"x"})), all), std::invalid_argument);
}

TEST_CASE("dimension examples") {
  const Ring r = ring("QQ[y1,y2,y3]");
  const TermOrder o = TermOrder::degrevlex(3);
  CHECK(dimension(Ideal(r, polys(r, {"y2^2-y1*y3"})), o) == 2);
  CHECK(dimension(Ideal(r, polys(r, {"y1", "y2", "y3"})), o) == 0);
  CHECK(dimension(Ideal(r, polys(r, {"1"})), o) == -1);
  CHECK(dimension(Ideal(r), o) == 3);
}

TEST_CASE("colon ideals and zero divisors") {
  const Ring r = ring("QQ[x1,x2,x3,x4]");
  const TermOrder o = TermOrder::degrevlex(4);
  const Ideal i(r, polys(r, {"x1^2", "x1*x3-x2", "x1*x4", "x4^2"}));
  const Polynomial l = poly(r, "x2-x4");
  const Ideal c = colon_ideal(i, l);
  CHECK(is_member(poly(r, "x1"), c, o));
  CHECK(is_zero_divisor(l, i));
  CHECK_FALSE(is_zero_divisor(poly(r, "x3-1"), Ideal(r, polys(r, {"x1^2"}))));

  const Ideal same = colon_ideal(i, poly(r, "1"));
  CHECK(ideal_contained(same, i));
  CHECK(ideal_contained(i, same));

  const Ring s = ring("QQ[x,y]");
  const Ideal xy(s, polys(s, {"x*y"}));
  const Ideal q = colon_ideal(xy, poly(s, "x"));
  const Ideal y(s, polys(s, {"y"}));
  CHECK(ideal_contained(q, y));
  CHECK(ideal_contained(y, q));
  // Degree-bounded brute force: members of (xy : x) are exactly multiples of y.
  for (const auto& g : all_power_products(2, 3)) {
    const Polynomial m = Polynomial::monomial(s, g, Rational(1));
    CHECK(member_by_search(m * poly(s, "x"), xy.generators(), 3) == is_member(m, q, TermOrder::degrevlex(2)));
  }
}

TEST_CASE("saturation and intersection") {
  const Ring r = ring("QQ[x,y]");
  const Ideal i(r, polys(r, {"x^2*y", "x*y^2"}));
  const Ideal sat = saturate(i, poly(r, "x"));
  CHECK(is_member(poly(r, "y"), sat, TermOrder::degrevlex(2)));
  CHECK_FALSE(is_member(poly(r, "x"), sat, TermOrder::degrevlex(2)));
  const Ideal meet = intersect(Ideal(r, polys(r, {"x"})), Ideal(r, polys(r, {"y"})));
  CHECK(ideal_contained(meet, Ideal(r, polys(r, {"x*y"}))));
  CHECK(ideal_contained(Ideal(r, polys(r, {"x*y"})), meet));
}

TEST_CASE("property: reduced bases are unique, idempotent, and satisfy Buchberger's criterion") {
  Gen gen(101);
  const Ring r = ring("QQ[x,y,z]");
  for (int it = 0; it < 60; ++it) {
    std::vector<Polynomial> gens;
    const int count = gen.integer(1, 3);
    for (int k = 0; k < count; ++k) gens.push_back(gen.polynomial(r, 4, 3, 5, 3));
    for (const auto& o : test_orders(3)) {
      const GroebnerBasis raw = buchberger<Rational>(o, r, gens);
      // S-polynomials of the unreduced basis reduce to zero.
      for (std::size_t i = 0; i < raw.elements.size(); ++i)
        for (std::size_t j = i + 1; j < raw.elements.size(); ++j)
          CHECK(normal_form<Rational>(o, s_polynomial(o, raw.elements[i], raw.elements[j]), raw.elements).is_zero());
      const GroebnerBasis red = reduce_basis(raw);
      CHECK(same_basis(reduce_basis(red), red));
      for (const auto& g : red.elements) CHECK(is_monic(o, g));
      // Generator order, redundant combinations, selection strategy and
      // fraction-free reduction do not change the reduced basis.
      std::vector<Polynomial> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
      shuffled.push_back(gens.front() * gen.polynomial(r, 2, 1) + gens.back());
      GroebnerOptions opt;
      opt.selection = gen.coin() ? Selection::Sugar : Selection::Normal;
      opt.integer_content = gen.coin();
      const GroebnerBasis other = reduce_basis(buchberger<Rational>(o, r, shuffled, opt));
      CHECK(same_basis(other, red));
      for (const auto& g : gens) CHECK(normal_form<Rational>(o, g, red.elements).is_zero());
    }
  }
}

TEST_CASE("property: membership agrees with a bounded search") {
  Gen gen(202);
  const Ring r = ring("QQ[x,y,z]");
  const TermOrder o = TermOrder::degrevlex(3);
  for (int it = 0; it < 40; ++it) {
    std::vector<Polynomial> gens;
    const int count = gen.integer(1, 2);
    for (int k = 0; k < count; ++k) gens.push_back(gen.polynomial(r, 3, 2, 4, 2));
    const Ideal i(r, gens);
    if (i.is_zero()) continue;
    const auto gb = groebner_basis(o, i);
    Polynomial member(r);
    for (const auto& g : gens) member += g * gen.polynomial(r, 3, 1, 4, 2);
    CHECK(is_member(member, gb));
    CHECK(member_by_search(member, gens, 1));
    const Polynomial f = gen.polynomial(r, 3, 3, 4, 2);
    const bool search = member_by_search(f, gens, 2);
    if (search) CHECK(is_member(f, gb));
    if (!is_member(f, gb)) CHECK_FALSE(search);
  }
}

TEST_CASE("property: dimension agrees with exhaustive subset search") {
  Gen gen(303);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    const Ring r(names);
    std::vector<PowerProduct> mons;
    std::vector<Polynomial> gens;
    const int count = gen.integer(0, 5);
    for (int k = 0; k < count; ++k) {
      PowerProduct pp = gen.power_product(n, 3);
      if (pp.is_one() && gen.coin(0.8)) continue;
      mons.push_back(pp);
      gens.push_back(Polynomial::monomial(r, pp, Rational(1)));
    }
    CHECK(dimension(Ideal(r, gens), TermOrder::degrevlex(n)) == dimension_by_subsets(n, mons));
  }
}

TEST_CASE("property: elimination ideals are contained in the ideal") {
  Gen gen(404);
  const Ring r = ring("QQ[x,y,z]");
  for (int it = 0; it < 30; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(gen.polynomial(r, 3, 2, 4, 2));
    const Ideal i(r, gens);
    const std::size_t v = gen.index(3);
    const std::vector<std::size_t> drop{v};
    const Ideal e = eliminate(i, drop);
    for (const auto& g : e.generators()) {
      CHECK(is_member(rename_into(g, r), i, TermOrder::degrevlex(3)));
    }
  }
}

TEST_CASE("deadline raises ResourceLimit") {
  const Ring r = ring("QQ[x,y,z,w]");
  GroebnerOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const auto gens = polys(r, {"x^5+y^4+z^3-1", "x^3+y^3+z^2-w", "x*y*z*w-1"});
  CHECK_THROWS_AS(buchberger<Rational>(TermOrder::lex(4), r, gens, opt), ResourceLimit);
}
