// Acceptance run: one PASS/FAIL line per criterion with its wall time.
// Arithmetic is exact, so every comparison is equality; runtime limits are
// the pinned tolerances.
//
//   slicegb_acceptance [--skip-extended] [--extended-timeout <seconds>]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slicegb/family.hpp"
#include "slicegb/groebner.hpp"
#include "slicegb/hough.hpp"
#include "slicegb/parser.hpp"
#include "slicegb/section.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

/// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class F>
  void expect_throws(F&& f, const std::string& what) {
    try {
      f();
    } catch (const std::exception&) {
      return;
    }
    failures_.push_back(what + " (no exception)");
  }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <class E, class F>
bool throws_as(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

std::set<std::string> printed_set(const TermOrder& order, const std::vector<Polynomial>& v) {
  std::set<std::string> out;
  for (const auto& g : v) out.insert(print_polynomial(order, g));
  return out;
}

bool contains(const std::vector<Polynomial>& v, const Polynomial& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

Family family(const char* params, const char* vars, std::initializer_list<std::string_view> gens) {
  const Ring a = ring(params);
  const Ring x = ring(vars);
  return Family(a, x, polys(x.with_prefix(a.names()), gens));
}

ParamPolynomial over(const Family& f, const char* text, const char* den = "1") {
  const ParamPolynomial p = f.to_param(poly(f.joint(), text));
  return p.scaled(inverse(RationalFunction(poly(f.params(), den), poly(f.params(), "1"))));
}

std::vector<Rational> distinct_gammas(Gen& gen, std::size_t count) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational g = gen.rational(20, 3);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  {
    const Ring r = ring("QQ[x,y,z,w]");
    const TermOrder order = TermOrder::xi_degrev(4, 2);
    const Ideal ideal(r, polys(r, {"z^2-x*w", "x^2*y-z*w^2"}));
    const GroebnerBasis gb = homogeneous_section_gb(ideal, HomLinearForm{2, {0, 3, 0, 1}}, order);
    const Ring hat = r.without(2);
    c.expect(gb.elements == polys(hat, {"y^2-1/9*x*w+2/3*y*w+1/9*w^2", "x^2*y-3*y*w^2-w^3",
                                        "x^3*w-x^2*w^2-3*x*w^3-9*y*w^3-3*w^4"}),
             "homogeneous example: three section polynomials");
  }
  const Ring r = ring("QQ[x0,x1,x2,x3]");
  const TermOrder order = TermOrder::xi_degrev(4, 0);
  const Ideal ideal(r, polys(r, {"x3^3-x1*x2*x0", "x2^3-x1*x3*x0-x2*x0^2", "x1^2*x2-x3*x0^2"}));
  const GroebnerBasis full = groebner_basis(order, ideal);
  c.expect(full.elements == polys(r, {"x3^3-x1*x2*x0", "x2^3-x1*x3*x0-x2*x0^2", "x1^2*x2-x3*x0^2",
                                      "x0*x1^3*x3-x0^2*x2^2*x3+x0^4*x3"}),
           "delete0: reduced basis {F1,F2,F3,F4}");
  const GroebnerBasis sec = homogeneous_section_gb(ideal, HomLinearForm{0, {0, 0, 0, 0}}, order);
  c.expect(printed_set(sec.order, sec.elements) == printed_set(sec.order, polys(r.without(0), {"x3^3", "x2^3", "x1^2*x2"})),
           "delete0: section {x3^3, x2^3, x1^2*x2}");
  c.expect(rho(0, full.elements[3]).is_zero(), "delete0: F4 maps to 0");
}

void criterion2(Check& c) {
  const Ring r = ring("QQ[x1,x2,x3,x4]");
  const TermOrder order = TermOrder::degrevlex(4);
  const Ideal ideal(r, polys(r, {"x2*x3-x4", "x1^3-2*x3^2"}));
  const GroebnerBasis gb = groebner_basis(order, ideal);
  const LinearForm l{0, {0, 0, 1, 1}, 0};
  c.expect(throws_as<HypothesisViolation>([&] { section_gb(gb, l); }), "section_gb raises HypothesisViolation");
  std::vector<Polynomial> images;
  for (const auto& g : ideal.generators()) images.push_back(apply_pi(l, g));
  const Ring hat = r.without(0);
  const GroebnerBasis direct = groebner_basis(order.restricted_without(0), Ideal(hat, images));
  c.expect(contains(direct.elements, poly(hat, "x2*x4^3+x3^2*x4+3*x3*x4^2+3*x4^3-2*x3*x4")),
           "recomputed section basis contains f3");
}

void criterion3(Check& c) {
  const Ring r = ring("QQ[x1,x2,x3,x4]");
  const TermOrder order = TermOrder::degrevlex(4);
  const auto g = polys(r, {"x1^2", "x1*x3-x2", "x1*x4", "x4^2"});
  const Ideal ideal(r, g);
  c.expect(throws_as<ZeroDivisor>([&] { verify_lifting(ideal, g, LinearForm{1, {0, 0, 0, 1}, 0}, order); }),
           "nonzerodivnecess raises ZeroDivisor");
  const GroebnerBasis gb = groebner_basis(order, ideal);
  c.expect(contains(gb.elements, poly(r, "x1*x2")) && contains(gb.elements, poly(r, "x2^2")),
           "recomputed basis contains x1*x2 and x2^2");
  const auto h = polys(r, {"x2^3+x1*x3-x2*x3", "x3"});
  const GroebnerBasis cert = verify_lifting(Ideal(r, h), h, LinearForm{0, {0, 1, 0, 0}, 0}, order);
  c.expect(cert.is_minimal && !cert.is_reduced, "notreduced: certified basis, not reduced");
}

void criterion4(Check& c) {
  const Ring r = ring("QQ[x,y]");
  const SliceFamily s = SliceFamily::axis(r, 1, {0, 1, 2});
  c.expect(common_lifting(s, polys(s.section_ring(), {"x", "x+1", "x+4"})) == poly(r, "y^2+x"),
           "three-slice example gives y^2 + x");
  Gen gen(401);
  int failures = 0;
  for (int iter = 0; iter < 220; ++iter) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("v" + std::to_string(j));
    const Ring rr(names);
    const std::size_t pivot = gen.index(n);
    const unsigned pivot_degree = static_cast<unsigned>(gen.integer(0, 5));
    std::vector<unsigned> box(n, 3);
    box[pivot] = pivot_degree;
    std::vector<Term<Rational>> terms;
    for (int k = gen.integer(1, 8); k > 0; --k) terms.push_back({gen.power_product_boxed(box), gen.nonzero_rational()});
    const Polynomial g = Polynomial::from_terms(rr, terms);
    SliceFamily f{rr, pivot, std::vector<Rational>(n, Rational(0)), {}};
    if (gen.coin())
      for (std::size_t j = pivot + 1; j < n; ++j) f.tail[j] = gen.rational(3, 2);
    f.gammas = distinct_gammas(gen, pivot_degree + 1 + static_cast<std::size_t>(gen.integer(0, 2)));
    std::vector<Polynomial> values;
    for (std::size_t k = 0; k < f.gammas.size(); ++k) values.push_back(apply_pi(f.form(k), g));
    if (!(common_lifting(f, values, iter % 2 == 0 ? 1 : 3) == g)) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " of 220 sample-and-recover instances failed");
  c.note("220 instances");
}

void criterion5(Check& c) {
  const Ring r = ring("QQ[x,y,z]");
  const TermOrder order = TermOrder::lex(3);
  const std::vector<std::pair<int, const char*>> listed = {
      {-5, "x^2+z^2+27000"}, {-4, "x^2+z^2+8000"}, {-3, "x^2+z^2+1728"}, {-2, "x^2+z^2+216"},
      {2, "x^2+z^2+8"},      {3, "x^2+z^2+216"},   {4, "x^2+z^2+1728"},  {5, "x^2+z^2+8000"}};
  SliceFamily s{r, 1, std::vector<Rational>(3, Rational(0)), {}};
  std::vector<GroebnerBasis> bases;
  for (const auto& [gamma, text] : listed) {
    s.gammas.push_back(gamma);
    bases.push_back(groebner_basis(order.restricted_without(1), Ideal(s.section_ring(), {poly(s.section_ring(), text)})));
  }
  const Polynomial f = poly(r, "x^2+z^2-y^3+3*y^4-3*y^5+y^6");
  const Reconstruction rec = reconstruct_gb(s, bases, order, GBCheck{groebner_basis(order, Ideal(r, {f}))});
  c.expect(rec.basis.elements == std::vector<Polynomial>{f} && rec.certified, "reconstruct_gb returns F exactly");
}

void criterion6(Check& c) {
  const Family f = family("QQ[a1,a2,a3]", "QQ[x,y,z,w]", {"a1*x*y-a2*y^2-w", "a2*x^2+a3*y^2+z^2"});
  const TermOrder order = TermOrder::degrevlex(4);
  const ParamGroebnerBasis gb = param_gb(f, order);
  const char* d = "a2^3+a1^2*a3";
  c.expect(gb.elements.size() == 3 && gb.elements[2] == over(f, "(a2^3+a1^2*a3)*y^3 + a1^2*y*z^2 + a1*a2*x*w + a2^2*y*w", d),
           "universal basis F3");
  const FamilySection sec = family_section(f, LinearForm{2, {0, 0, 0, 1}, -1}, order);
  c.expect(sec.hypothesis_ok && sec.basis.elements.size() == 3 &&
               sec.basis.elements[2] ==
                   over(sec.family, "(a2^3+a1^2*a3)*y^3 + a1^2*y*w^2 + a1*a2*x*w + (a2^2-2*a1^2)*y*w + a1^2*y", d),
           "section by w - 1: F3 bar");

  const Family cone = family("QQ[a1,a2]", "QQ[x,y]", {"x^2+a1^2*x+a1*a2*y+a2^2"});
  const SigmaScheme sch = sigma_scheme(param_gb(cone, TermOrder::degrevlex(2)), true);
  c.expect(sch.ring && sch.implicit.size() == 1 &&
               primitive_normalized(TermOrder::degrevlex(3), sch.implicit[0]) == poly(*sch.ring, "y2^2-y1*y3") &&
               sch.dimension == 2,
           "sigma scheme (y2^2 - y1*y3), dimension 2");

  const Family nd = family("QQ[a1,a2]", "QQ[x,y]", {"x^2-a1*y", "y^2-a2"});
  const FamilySection s2 = family_section(nd, LinearForm{0, {0, 1}, 0}, TermOrder::degrevlex(2));
  c.expect(!s2.independence.independent && s2.independence.witness &&
               *s2.independence.witness == poly(nd.params(), "a1^2*a2-a2^2"),
           "not dominant: witness a1^2*a2 - a2^2");

  const Family v = family("QQ[a1,a2]", "QQ[z,y,x]", {"(x^2+y^2)^3-(a1*(x^2+y^2)-a2*(x^3-3*x*y^2))^2", "a1*z-a2*x"});
  c.expect(sigma_denominator(param_gb(v, TermOrder::degrevlex(3))) == poly(v.params(), "a1"), "vertebral: d = a1");
}

void criterion7(Check& c) {
  const Family lines = family("QQ[a1,a2]", "QQ[x1,x2]", {"x2+a1*x1+a2"});
  c.expect(generic_hough_dimension(lines).generic == 1, "line-points: generic dimension 1");

  const Family nd = family("QQ[a1,a2]", "QQ[x1,x2]", {"x1^2-x1", "x1*x2-x2", "x2^2+a1*a2*x1-(a1+a2)*x2"});
  const std::size_t drop[] = {0, 1};
  const GroebnerBasis image = groebner_basis(TermOrder::degrevlex(2), eliminate(nd.ideal(), drop));
  c.expect(printed_set(image.order, image.elements) ==
               printed_set(image.order, polys(nd.vars(), {"x1^2-x1", "x1*x2-x2"})),
           "notdominant: elimination (x1^2-x1, x1*x2-x2)");
  c.expect(hough_ideal(nd, std::vector<Rational>{0, 0}).dimension == 2, "notdominant: dimension 2 over (0,0)");
  bool ones = true;
  for (int k = -3; k <= 3; ++k) ones = ones && hough_ideal(nd, std::vector<Rational>{1, Rational(k, 2)}).dimension == 1;
  c.expect(ones, "notdominant: dimension 1 at sampled points of x1 = 1");

  const Family v = family("QQ[a1,a2]", "QQ[z,y,x]", {"(x^2+y^2)^3-(a1*(x^2+y^2)-a2*(x^3-3*x*y^2))^2", "a1*z-a2*x"});
  c.expect(generic_hough_dimension(v).generic == 0, "vertebral: generic dimension 0");
  const HoughResult h = hough_ideal(v, std::vector<Rational>{1, 1, 1});
  c.expect(h.dimension == 0 && h.ideal.elements == polys(v.params(), {"a1-a2", "a2^2-1/2"}),
           "vertebral: transform of (1,1,1) is zero-dimensional of degree 2");

  const Family v2 = family("QQ[a1,a2]", "QQ[z,y,x]", {"(x^2+y^2)^3-a1*((x^2+y^2)-(x^3-3*x*y^2))^2", "z-a2*x"});
  c.expect(solve_linear_hough(v2, std::vector<Rational>{2, 1, 1}) == std::vector<Rational>{Rational(1, 2), Rational(2)},
           "vertebral2: (x,y,z) = (1,1,2) gives (1/2, 2)");
}

void criterion8(Check& c) {
  const Family tmpl = family("QQ[a1,a2,a3,a4]", "QQ[x,y]", {"x^3-a1*y^2+a2*x+a3*y+a4"});
  const Ring r = ring("QQ[x,y,z]");
  auto slice = [&](int gamma, const char* curve) {
    return SliceData{Rational(gamma), Ideal(tmpl.vars(), polys(tmpl.vars(), {curve}))};
  };
  const std::vector<SliceData> slices{slice(0, "x^3-y^2"), slice(1, "x^3-y^2-x-y-1"), slice(-1, "x^3-y^2+x+y+1"),
                                      slice(2, "x^3-y^2-2*x-2*y-2")};
  const Polynomial s = reconstruct_surface(tmpl, r, 2, slices, TermOrder::degrevlex(3), Trust{});
  c.expect(s == poly(r, "x^3-x*z-y^2-y*z-z"), "surface x^3 - x*z - y^2 - y*z - z");
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

// I Q(a)[x] cap Q[a, x], from the Q[a]-leading coefficients of a block basis.
Ideal saturated_family(const Family& f) {
  const std::size_t m = f.params().size(), n = f.vars().size();
  std::vector<std::string> names = f.vars().names();
  names.insert(names.end(), f.params().names().begin(), f.params().names().end());
  const Ring xa(names);
  std::vector<int> to_xa(m + n), back(m + n);
  for (std::size_t j = 0; j < m; ++j) {
    to_xa[j] = static_cast<int>(n + j);
    back[n + j] = static_cast<int>(j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    to_xa[m + i] = static_cast<int>(i);
    back[i] = static_cast<int>(m + i);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : f.generators()) gens.push_back(map_variables(g, xa, to_xa));
  const TermOrder block = TermOrder::elimination(m + n, n);
  Polynomial h = constant(xa, 1);
  for (const auto& g : groebner_basis(block, Ideal(xa, gens)).elements) {
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
  std::vector<Polynomial> out;
  const Ideal sat = saturate(Ideal(xa, gens), h);
  for (const auto& g : sat.generators()) out.push_back(map_variables(g, f.joint(), back));
  return Ideal(f.joint(), out);
}

void criterion9(Check& c) {
  // Idempotence, order and generator independence, S-polynomials post hoc.
  {
    Gen gen(101);
    const Ring r = ring("QQ[x,y,z]");
    int bad = 0, cases = 0;
    for (int it = 0; it < 40; ++it) {
      std::vector<Polynomial> gens;
      for (int k = gen.integer(1, 3); k > 0; --k) gens.push_back(gen.polynomial(r, 4, 3, 5, 3));
      for (const auto& o : {TermOrder::degrevlex(3), TermOrder::lex(3), TermOrder::deglex(3)}) {
        ++cases;
        const GroebnerBasis raw = buchberger<Rational>(o, r, gens);
        for (std::size_t i = 0; i < raw.elements.size(); ++i)
          for (std::size_t j = i + 1; j < raw.elements.size(); ++j)
            if (!normal_form<Rational>(o, s_polynomial(o, raw.elements[i], raw.elements[j]), raw.elements).is_zero()) ++bad;
        const GroebnerBasis red = reduce_basis(raw);
        if (!(reduce_basis(red).elements == red.elements)) ++bad;
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
        GroebnerOptions opt;
        opt.selection = gen.coin() ? Selection::Sugar : Selection::Normal;
        if (!(reduce_basis(buchberger<Rational>(o, r, shuffled, opt)).elements == red.elements)) ++bad;
      }
    }
    c.expect(bad == 0, std::to_string(bad) + " Groebner basis property failures");
    c.note(std::to_string(cases) + " basis cases");
  }
  // Section/lift round trip.
  {
    Gen gen(403);
    const Ring r = ring("QQ[x,y,z]");
    int bad = 0, done = 0;
    while (done < 100) {
      const TermOrder order = done % 2 == 0 ? TermOrder::degrevlex(3) : TermOrder::lex(3);
      const std::size_t pivot = gen.index(3);
      std::vector<Polynomial> gens;
      for (int k = gen.integer(1, 3); k > 0; --k) gens.push_back(gen.polynomial(r, 3, 2, 5, 2));
      const Ideal ideal(r, gens);
      if (ideal.is_zero()) continue;
      const GroebnerBasis gb = groebner_basis(order, ideal);
      if (gb.is_unit() || std::any_of(gb.elements.begin(), gb.elements.end(), [&](const Polynomial& g) {
            return leading_term(order, g).pp[pivot] != 0;
          }))
        continue;
      LinearForm l{pivot, std::vector<Rational>(3, Rational(0)), gen.rational(9, 2)};
      if (gen.coin())
        for (std::size_t j = pivot + 1; j < 3; ++j) l.tail[j] = gen.rational(2, 1);
      const SectionReport rep = section_gb(gb, l);
      std::vector<Polynomial> images;
      for (const auto& f : gens) images.push_back(apply_pi(l, f));
      const GroebnerBasis direct = groebner_basis(rep.section.order, Ideal(rep.section.ring, images));
      if (!(reduce_basis(rep.section).elements == direct.elements)) ++bad;
      if (!(verify_lifting(ideal, gb.elements, l, order).elements == gb.elements)) ++bad;
      ++done;
    }
    c.expect(bad == 0, std::to_string(bad) + " section/lift round-trip failures");
    c.note("100 round trips");
  }
  // Dimension against subset search on monomial ideals.
  {
    Gen gen(303);
    int bad = 0;
    for (int it = 0; it < 150; ++it) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
      const Ring r(names);
      std::vector<PowerProduct> mons;
      std::vector<Polynomial> gens;
      for (int k = gen.integer(0, 5); k > 0; --k) {
        PowerProduct pp = gen.power_product(n, 3);
        if (pp.is_one() && gen.coin(0.8)) continue;
        mons.push_back(pp);
        gens.push_back(Polynomial::monomial(r, pp, Rational(1)));
      }
      if (dimension(Ideal(r, gens), TermOrder::degrevlex(n)) != dimension_by_subsets(n, mons)) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " dimension mismatches");
    c.note("150 monomial ideals");
  }
  // Specialization coherence against the torsion-free family.
  {
    Gen gen(502);
    const Ring params = ring("QQ[a,b]");
    const Ring vars = ring("QQ[x,y]");
    const Ring joint = vars.with_prefix(params.names());
    const TermOrder order = TermOrder::degrevlex(2);
    int pairs = 0, bad = 0;
    for (int iter = 0; pairs < 60 && iter < 400; ++iter) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k) {
        std::vector<Term<Rational>> terms;
        for (int t = gen.integer(2, 3); t > 0; --t) {
          PowerProduct pp(4);
          pp.set(gen.index(2), static_cast<unsigned>(gen.integer(0, 1)));
          for (unsigned e = static_cast<unsigned>(gen.integer(0, 2)); e > 0; --e) {
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
        continue;
      }
      const Ideal saturated = saturated_family(f);
      const Polynomial d = sigma_denominator(gb);
      for (int k = 0; k < 4; ++k) {
        const std::vector<Rational> alpha{Rational(gen.integer(-2, 2)), Rational(gen.integer(-2, 2))};
        if (evaluate(d, alpha) == 0) continue;
        std::vector<Polynomial> at;
        for (const auto& g : saturated.generators()) at.push_back(f.at_params(g, alpha));
        if (!(specialize_fiber(gb, alpha).elements == groebner_basis(order, Ideal(vars, at)).elements)) ++bad;
        ++pairs;
      }
    }
    c.expect(pairs >= 50, "only " + std::to_string(pairs) + " family/point pairs");
    c.expect(bad == 0, std::to_string(bad) + " specialization mismatches");
    c.note(std::to_string(pairs) + " family/point pairs");
  }
}

void criterion10(Check& c, double timeout) {
  const Ring params = ring("QQ[s,t]");
  const Ring xr = ring("QQ[x,y,z]");
  const auto par = polys(params, {"s^5-s*t^3-t", "s*t^2-s", "s^4-t^2"});
  const TermOrder order = TermOrder::degrevlex(3);
  auto run = [&](ImplicitMode mode, double& seconds) -> std::optional<Polynomial> {
    ImplicitizeOptions o;
    o.mode = mode;
    o.pivot = 2;
    o.jobs = 4;
    o.groebner.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout));
    const auto t0 = Clock::now();
    try {
      const Polynomial eq = implicitize(xr, par, order, o).equation;
      seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      return eq;
    } catch (const ResourceLimit&) {
      seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      return std::nullopt;
    }
  };
  double ts = 0, te = 0;
  const auto slice = run(ImplicitMode::Slice, ts);
  c.expect(slice.has_value(), "slice mode did not finish");
  if (!slice) return;
  c.expect(slice->total_degree() == 14, "degree " + std::to_string(slice->total_degree()) + ", expected 14");
  c.expect(slice->size() == 319, std::to_string(slice->size()) + " terms, expected 319");
  const auto elim = run(ImplicitMode::Eliminate, te);
  std::ostringstream note;
  note.precision(3);
  note << "slice " << ts << " s";
  if (elim) {
    c.expect(*elim == *slice, "elimination and slice results differ");
    c.expect(ts <= te, "slice mode slower than elimination");
    note << ", elimination " << te << " s, ratio " << te / std::max(ts, 1e-9);
  } else {
    note << ", elimination timed out after " << te << " s";
  }
  c.note(note.str());
}

struct Criterion {
  int id;
  const char* title;
  double limit;  // seconds; 0 means no limit
  std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  bool extended = true;
  double extended_timeout = 3600;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--skip-extended")) {
      extended = false;
    } else if (!std::strcmp(argv[i], "--extended-timeout") && i + 1 < argc) {
      extended_timeout = std::atof(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--skip-extended] [--extended-timeout <seconds>]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "homogeneous sections", 1, criterion1},
      {2, "section hypothesis negative control", 1, criterion2},
      {3, "lifting negative control", 1, criterion3},
      {4, "common lifting", 30, criterion4},
      {5, "lemon round trip", 5, criterion5},
      {6, "family layer", 10, criterion6},
      {7, "Hough layer", 10, criterion7},
      {8, "surface reconstruction", 5, criterion8},
      {9, "property suites", 0, criterion9},
      {10, "sectparams implicitization (extended)", 0, [&](Check& c) { criterion10(c, extended_timeout); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    if (cr.id == 10 && !extended) {
      std::printf("SKIP %2d %s\n", cr.id, cr.title);
      continue;
    }
    Check check;
    const auto t0 = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (cr.limit > 0 && secs > cr.limit) check.expect(false, "runtime limit exceeded");
    const bool ok = check.failures().empty();
    if (!ok) ++failed;
    std::printf("%s %2d %s (%.2f s", ok ? "PASS" : "FAIL", cr.id, cr.title, secs);
    if (cr.limit > 0) std::printf(", limit %.0f s", cr.limit);
    for (const auto& n : check.notes()) std::printf("; %s", n.c_str());
    std::printf(")\n");
    for (const auto& f : check.failures()) std::printf("     - %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
