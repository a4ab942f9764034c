#include <algorithm>

#include "doctest.h"
#include "slicegb/family.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// I Q(a)[x] cap Q[a, x] = I : h^infinity, with h the product of the
// Q[a]-leading coefficients of a basis for a block order with x first.
Ideal saturated_family(const Family& f) {
  const std::size_t m = f.params().size(), n = f.vars().size();
  std::vector<std::string> names = f.vars().names();
  names.insert(names.end(), f.params().names().begin(), f.params().names().end());
  const Ring xa(names);
  std::vector<int> to_xa(m + n);
  for (std::size_t j = 0; j < m; ++j) to_xa[j] = static_cast<int>(n + j);
  for (std::size_t i = 0; i < n; ++i) to_xa[m + i] = static_cast<int>(i);
  std::vector<Polynomial> gens;
  for (const auto& g : f.generators()) gens.push_back(map_variables(g, xa, to_xa));
  const TermOrder block = TermOrder::elimination(m + n, n);
  const GroebnerBasis gb = groebner_basis(block, Ideal(xa, gens));
  Polynomial h = constant(xa, 1);
  for (const auto& g : gb.elements) {
    const PowerProduct lt = leading_term(block, g).pp;
    std::vector<Term<Rational>> lc;
    for (const auto& t : g.terms()) {
      bool same = true;
      for (std::size_t i = 0; i < n; ++i) same = same && t.pp[i] == lt[i];
      if (!same) continue;
      PowerProduct pp = t.pp;
      for (std::size_t i = 0; i < n; ++i) pp.set(i, 0);
      lc.push_back({pp, t.coeff});
    }
    h *= Polynomial::from_terms(xa, lc);
  }
  const Ideal sat = saturate(Ideal(xa, gens), h);
  std::vector<int> back(m + n);
  for (std::size_t i = 0; i < n; ++i) back[i] = static_cast<int>(m + i);
  for (std::size_t j = 0; j < m; ++j) back[n + j] = static_cast<int>(j);
  std::vector<Polynomial> out;
  for (const auto& g : sat.generators()) out.push_back(map_variables(g, f.joint(), back));
  return Ideal(f.joint(), out);
}

Family family(const char* params, const char* vars, std::initializer_list<std::string_view> gens) {
  const Ring a = ring(params);
  const Ring x = ring(vars);
  const Ring joint = x.with_prefix(a.names());
  return Family(a, x, polys(joint, gens));
}

RationalFunction rf(const Ring& params, const char* num, const char* den = "1") {
  return RationalFunction(poly(params, num), poly(params, den));
}

std::vector<std::string> texts(const std::vector<RationalFunction>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

// Element of the joint ring as a polynomial over Q(a), divided by `den`.
ParamPolynomial over(const Family& f, const char* text, const char* den = "1") {
  const ParamPolynomial p = f.to_param(poly(f.joint(), text));
  return p.scaled(inverse(rf(f.params(), den)));
}

const char* kCoeffFamily[] = {"a1*x*y-a2*y^2-w", "a2*x^2+a3*y^2+z^2"};

}  // namespace

TEST_CASE("family plumbing") {
  const Family f = family("QQ[a1,a2]", "QQ[x,y]", {"a1*x^2 + a2*x*y - a1*a2 + 3"});
  const ParamPolynomial p = f.to_param(f.generators()[0]);
  CHECK(p.size() == 3);
  CHECK(print_polynomial(TermOrder::degrevlex(2), p) == "a1*x^2 +a2*x*y +(-a1*a2 +3)");
  const std::vector<Rational> alpha{2, 1};
  CHECK(f.at_params(f.generators()[0], alpha) == poly(f.vars(), "2*x^2+x*y+1"));
  const std::vector<Rational> point{1, 2};
  CHECK(f.at_point(f.generators()[0], point) == poly(f.params(), "a1+2*a2-a1*a2+3"));
  CHECK(f.param_degree() == 2);
}

TEST_CASE("universal basis of the four-coordinate family") {
  const Family f = family("QQ[a1,a2,a3]", "QQ[x,y,z,w]", {kCoeffFamily[0], kCoeffFamily[1]});
  const TermOrder order = TermOrder::degrevlex(4);
  const ParamGroebnerBasis gb = param_gb(f, order);
  const char* d = "a2^3+a1^2*a3";
  REQUIRE(gb.elements.size() == 3);
  CHECK(gb.elements[0] == over(f, kCoeffFamily[0], "a1"));
  CHECK(gb.elements[1] == over(f, kCoeffFamily[1], "a2"));
  CHECK(gb.elements[2] ==
        over(f, "(a2^3+a1^2*a3)*y^3 + a1^2*y*z^2 + a1*a2*x*w + a2^2*y*w", d));
  CHECK(gb.is_reduced);

  CHECK(texts(ncc_list(gb)) == std::vector<std::string>{"-a2/a1", "-1/a1", "a3/a2", "1/a2",
                                                        "a1^2/(a2^3 +a1^2*a3)", "a1*a2/(a2^3 +a1^2*a3)",
                                                        "a2^2/(a2^3 +a1^2*a3)"});
  CHECK(sigma_denominator(gb) == poly(f.params(), "a1*a2*(a2^3+a1^2*a3)"));

  const FamilySection sec = family_section(f, LinearForm{2, {0, 0, 0, 1}, -1}, order);
  CHECK(sec.hypothesis_ok);
  CHECK(sec.offending.empty());
  CHECK(sec.basis.is_reduced);
  CHECK(sec.independence.independent);
  CHECK(sec.independence.agreement);
  REQUIRE(sec.basis.elements.size() == 3);
  const Family& s = sec.family;
  CHECK(sec.basis.elements[2] ==
        over(s, "(a2^3+a1^2*a3)*y^3 + a1^2*y*w^2 + a1*a2*x*w + (a2^2-2*a1^2)*y*w + a1^2*y", d));
  const auto ncc = texts(ncc_list(sec.basis));
  CHECK(ncc.size() == 10);
  CHECK(std::vector<std::string>(ncc.end() - 4, ncc.end()) ==
        std::vector<std::string>{"a1^2/(a2^3 +a1^2*a3)", "a1*a2/(a2^3 +a1^2*a3)",
                                 "(-2*a1^2 +a2^2)/(a2^3 +a1^2*a3)", "a1^2/(a2^3 +a1^2*a3)"});
  // The sectioned universal basis agrees with a direct computation.
  CHECK(param_gb(s, order.restricted_without(2)).elements == sec.basis.elements);
}

TEST_CASE("sigma scheme of a cone") {
  const Family f = family("QQ[a1,a2]", "QQ[x,y]", {"x^2+a1^2*x+a1*a2*y+a2^2"});
  const ParamGroebnerBasis gb = param_gb(f, TermOrder::degrevlex(2));
  CHECK(texts(ncc_list(gb)) == std::vector<std::string>{"a1^2", "a1*a2", "a2^2"});
  const SigmaScheme sch = sigma_scheme(gb, true);
  REQUIRE(sch.ring);
  REQUIRE(sch.implicit.size() == 1);
  CHECK(primitive_normalized(TermOrder::degrevlex(3), sch.implicit[0]) == poly(*sch.ring, "y2^2-y1*y3"));
  CHECK(sch.dimension == 2);
  CHECK_FALSE(sigma_scheme(gb, false).dimension.has_value());
}

TEST_CASE("sigma scheme of the four-coordinate family is three dimensional") {
  const Family f = family("QQ[a1,a2,a3]", "QQ[x,y,z,w]", {kCoeffFamily[0], kCoeffFamily[1]});
  const SigmaScheme sch = sigma_scheme(param_gb(f, TermOrder::degrevlex(4)), true);
  CHECK(sch.coordinates.size() == 7);
  CHECK(sch.dimension == 3);
}

TEST_CASE("constant family") {
  const Family f = family("QQ[a]", "QQ[x,y]", {"x^2-y", "y^2-2"});
  const ParamGroebnerBasis gb = param_gb(f, TermOrder::degrevlex(2));
  CHECK(ncc_list(gb).empty());
  CHECK(sigma_denominator(gb) == poly(f.params(), "1"));
  const SigmaScheme sch = sigma_scheme(gb, true);
  CHECK(sch.dimension == 0);
  CHECK_FALSE(sch.ring.has_value());
  const std::vector<Rational> alpha{5};
  const GroebnerBasis fiber = specialize_fiber(gb, alpha);
  CHECK(fiber.elements == groebner_basis(TermOrder::degrevlex(2), Ideal(f.vars(), polys(f.vars(), {"x^2-y", "y^2-2"}))).elements);
  CHECK(fiber.is_reduced);
}

TEST_CASE("independence and its loss under a section") {
  const Family f = family("QQ[a1,a2]", "QQ[x,y]", {"x^2-a1*y", "y^2-a2"});
  const Independence ind = params_independent(f);
  CHECK(ind.independent);
  CHECK(ind.agreement);
  CHECK_FALSE(ind.witness);

  const FamilySection sec = family_section(f, LinearForm{0, {0, 1}, 0}, TermOrder::degrevlex(2));
  CHECK_FALSE(sec.hypothesis_ok);
  CHECK(sec.offending == std::vector<std::size_t>{1});
  CHECK_FALSE(sec.independence.independent);
  CHECK(sec.independence.agreement);
  REQUIRE(sec.independence.witness);
  CHECK(*sec.independence.witness == poly(f.params(), "a1^2*a2-a2^2"));
  CHECK(sec.basis.elements.empty());

  const Family dep = family("QQ[a1,a2]", "QQ[x]", {"a1", "x-a2"});
  const Independence d = params_independent(dep);
  CHECK_FALSE(d.independent);
  CHECK(d.agreement);
  CHECK(*d.witness == poly(dep.params(), "a1"));
  CHECK_THROWS_AS(param_gb(dep, TermOrder::degrevlex(1)), DependentParameters);
}

TEST_CASE("vertebral family") {
  const Family f = family("QQ[a1,a2]", "QQ[z,y,x]",
                          {"(x^2+y^2)^3-(a1*(x^2+y^2)-a2*(x^3-3*x*y^2))^2", "a1*z-a2*x"});
  const TermOrder order = TermOrder::degrevlex(3);
  const ParamGroebnerBasis gb = param_gb(f, order);
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.leading_terms() == std::vector<PowerProduct>{PowerProduct{1, 0, 0}, PowerProduct{0, 6, 0}});
  CHECK(gb.elements[0] == over(f, "a1*z-a2*x", "a1"));
  CHECK(gb.elements[1] == f.to_param(f.generators()[0]));
  CHECK(sigma_denominator(gb) == poly(f.params(), "a1"));
  const std::vector<Rational> bad{0, 1};
  CHECK_THROWS_AS(specialize_fiber(gb, bad), DenominatorVanishes);
}

TEST_CASE("fibers with equal coefficient lists coincide") {
  const Family f = family("QQ[a1,a2,a3]", "QQ[x1,x2]",
                          {"x1^2+a1^2*x2-a2", "x2^3+(a3^2+1)*x1^2+x1+a1*a3*x2-1"});
  const ParamGroebnerBasis gb = param_gb(f, TermOrder::degrevlex(2));
  const std::vector<Rational> p{1, 1, 1}, q{-1, 1, -1};
  CHECK(specialize_fiber(gb, p).elements == specialize_fiber(gb, q).elements);
  // The reduced basis rewrites the second generator modulo the first.
  CHECK(texts(ncc_list(gb)) ==
        std::vector<std::string>{"a1^2", "-a2", "-a1^2*a3^2 -a1^2 +a1*a3", "a2*a3^2 +a2 -1"});
}

TEST_CASE("parameter torsion changes special fibers inside the free set") {
  const Family f = family("QQ[a]", "QQ[x,y]", {"a*x", "y"});
  const ParamGroebnerBasis gb = param_gb(f, TermOrder::degrevlex(2));
  CHECK(sigma_denominator(gb) == poly(f.params(), "1"));
  const std::vector<Rational> zero{0};
  CHECK(specialize_fiber(gb, zero).elements == polys(f.vars(), {"y", "x"}));
  const Ideal sat = saturated_family(f);
  CHECK(groebner_basis(TermOrder::degrevlex(3), sat).elements == polys(f.joint(), {"y", "x"}));
}

TEST_CASE("rational function arithmetic") {
  Gen gen(501);
  const Ring a = ring("QQ[a,b]");
  for (int iter = 0; iter < 100; ++iter) {
    const Polynomial p = gen.polynomial(a, 3, 2);
    const Polynomial q = gen.polynomial(a, 3, 2);
    if (p.is_zero() || q.is_zero()) continue;
    const RationalFunction pq(p, q), qp(q, p);
    CHECK(pq * qp == RationalFunction(a, 1));
    CHECK(RationalFunction(pq.numerator(), pq.denominator()) == pq);
    CHECK(pq / pq == RationalFunction(a, 1));
    CHECK((pq + qp) - qp == pq);
    CHECK(pq.denominator() == make_monic(TermOrder::degrevlex(2), pq.denominator()));
  }
}

TEST_CASE("property: specialization coherence") {
  Gen gen(502);
  const Ring params = ring("QQ[a,b]");
  const Ring vars = ring("QQ[x,y]");
  const Ring joint = vars.with_prefix(params.names());
  const TermOrder order = TermOrder::degrevlex(2);
  int pairs = 0;
  for (int iter = 0; pairs < 60 && iter < 400; ++iter) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Term<Rational>> terms;
      for (int t = gen.integer(2, 3); t > 0; --t) {
        PowerProduct pp(4);
        pp.set(gen.index(2), static_cast<unsigned>(gen.integer(0, 1)));
        const unsigned dx = static_cast<unsigned>(gen.integer(0, 2));
        for (unsigned e = 0; e < dx; ++e) {
          const std::size_t v = 2 + gen.index(2);
          pp.set(v, pp[v] + 1);
        }
        terms.push_back({pp, Rational(gen.integer(1, 3) * (gen.coin() ? 1 : -1))});
      }
      gens.push_back(Polynomial::from_terms(joint, terms));
    }
    const Family f(params, vars, gens);
    ParamGroebnerBasis gb;
    try {
      gb = param_gb(f, order);
    } catch (const DependentParameters&) {
      CHECK_FALSE(params_independent(f).independent);
      continue;
    }
    const Ideal saturated = saturated_family(f);
    const Polynomial d = sigma_denominator(gb);
    const auto ncc = ncc_list(gb);
    std::vector<std::pair<std::vector<Rational>, GroebnerBasis>> seen;
    for (int k = 0; k < 4; ++k) {
      const std::vector<Rational> alpha{Rational(gen.integer(-2, 2)), Rational(gen.integer(-2, 2))};
      if (evaluate(d, alpha) == 0) {
        CHECK_THROWS_AS(specialize_fiber(gb, alpha), DenominatorVanishes);
        continue;
      }
      const GroebnerBasis fiber = specialize_fiber(gb, alpha);
      std::vector<Polynomial> at;
      for (const auto& g : saturated.generators()) at.push_back(f.at_params(g, alpha));
      const GroebnerBasis direct = groebner_basis(order, Ideal(vars, at));
      CHECK(fiber.elements == direct.elements);
      CHECK(fiber.leading_terms() == gb.leading_terms());
      CHECK(fiber.is_reduced);
      std::vector<Rational> values;
      for (const auto& q : ncc) values.push_back(q.evaluate(alpha));
      for (const auto& [other_values, other] : seen)
        CHECK((other_values == values) == (other.elements == fiber.elements));
      seen.push_back({values, fiber});
      ++pairs;
    }
  }
  CHECK(pairs >= 50);
}
