#include "slicegb/hough.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "slicegb/linear_algebra.hpp"
#include "slicegb/parallel.hpp"

namespace slicegb {

namespace {

unsigned param_degree_of(const Family& family, const Term<Rational>& t) {
  unsigned d = 0;
  for (std::size_t j = 0; j < family.params().size(); ++j) d += t.pp[j];
  return d;
}

/// g(a, x) = parts[0](x) + sum_j a_j * parts[j + 1](x) for g linear in a.
std::vector<Polynomial> linear_parts(const Family& family, const Polynomial& g) {
  const std::size_t m = family.params().size(), n = family.vars().size();
  std::vector<std::vector<Term<Rational>>> terms(m + 1);
  for (const auto& t : g.terms()) {
    std::size_t slot = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (t.pp[j] > 0) slot = j + 1;
    PowerProduct pp(n);
    for (std::size_t i = 0; i < n; ++i) pp.set(i, t.pp[m + i]);
    terms[slot].push_back({pp, t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& ts : terms) out.push_back(Polynomial::from_terms(family.vars(), std::move(ts)));
  return out;
}

void require_linear(const Family& family) {
  if (!linear_in_params(family)) throw NotLinearInParams("generators are not linear in the parameters");
}

/// Row of a_1..a_m coefficients and right-hand side of l(a) = 0, deg l <= 1.
void append_row(const Polynomial& l, Matrix& a, std::vector<Rational>& b) {
  const std::size_t m = l.ring().size();
  std::vector<Rational> row(m);
  Rational rhs(0);
  for (const auto& t : l.terms()) {
    if (t.pp.is_one()) {
      rhs = -t.coeff;
      continue;
    }
    for (std::size_t j = 0; j < m; ++j)
      if (t.pp[j] > 0) row[j] = t.coeff;
  }
  a.push_back(std::move(row));
  b.push_back(std::move(rhs));
}

GroebnerBasis param_ideal(const Family& family, std::vector<Polynomial> gens) {
  return groebner_basis(TermOrder::degrevlex(family.params().size()), Ideal(family.params(), std::move(gens)));
}

int basis_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const auto lts = gb.leading_terms();
  return dimension_of_leading_terms(gb.ring.size(), lts);
}

/// Solves the stacked system and packages the outcome; `rows` are the
/// polynomials of degree <= 1 in Q[a] whose common zeros are sought.
DetectionResult solve_rows(const Family& family, const std::vector<Polynomial>& rows) {
  const std::size_t m = family.params().size();
  Matrix a;
  std::vector<Rational> b;
  for (const auto& l : rows) append_row(l, a, b);
  const LinearSolution sol = solve_linear(std::move(a), std::move(b), m);
  if (!sol.consistent) return DetectedNothing{};
  if (!sol.kernel.empty()) {
    DetectedFamily out;
    out.ideal = param_ideal(family, rows);
    out.dimension = static_cast<int>(sol.kernel.size());
    return out;
  }
  return Detected{sol.particular};
}

}  // namespace

bool linear_in_params(const Family& family) {
  for (const auto& g : family.generators())
    for (const auto& t : g.terms())
      if (param_degree_of(family, t) > 1) return false;
  return true;
}

HoughResult hough_ideal(const Family& family, std::span<const Rational> p) {
  if (p.size() != family.vars().size()) throw std::invalid_argument("point has the wrong arity");
  std::vector<Polynomial> gens;
  for (const auto& g : family.generators()) gens.push_back(family.at_point(g, p));
  HoughResult out;
  out.ideal = param_ideal(family, gens);
  out.empty = out.ideal.is_unit();
  out.dimension = basis_dimension(out.ideal);
  if (out.dimension == 0 && linear_in_params(family)) {
    const DetectionResult d = solve_rows(family, gens);
    if (const auto* hit = std::get_if<Detected>(&d)) out.solution = hit->alpha;
  }
  return out;
}

HoughDimension generic_hough_dimension(const Family& family, const GroebnerOptions& options) {
  const std::size_t m = family.params().size(), n = family.vars().size();
  const Ideal ideal = family.ideal();
  HoughDimension out;
  out.family_dimension = dimension(ideal, TermOrder::degrevlex(m + n));
  std::vector<std::size_t> drop(m);
  for (std::size_t j = 0; j < m; ++j) drop[j] = j;
  const Ideal image = eliminate(ideal, drop, options);
  out.image_dimension = dimension(image, TermOrder::degrevlex(n));
  out.generic = out.family_dimension - out.image_dimension;
  out.dominant = image.is_zero();
  out.zero_certificate = out.dominant && out.family_dimension == static_cast<int>(n);
  return out;
}

Point solve_linear_hough(const Family& family, std::span<const Rational> p) {
  require_linear(family);
  if (p.size() != family.vars().size()) throw std::invalid_argument("point has the wrong arity");
  std::vector<Polynomial> rows;
  for (const auto& g : family.generators()) rows.push_back(family.at_point(g, p));
  const DetectionResult d = solve_rows(family, rows);
  if (std::holds_alternative<DetectedNothing>(d)) throw Inconsistent("the point lies on no fiber");
  if (const auto* f = std::get_if<DetectedFamily>(&d))
    throw Underdetermined("the Hough transform has dimension " + std::to_string(f->dimension));
  return std::get<Detected>(d).alpha;
}

DetectionResult detect(const Family& family, const std::vector<Point>& points) {
  require_linear(family);
  std::vector<Polynomial> rows;
  for (const auto& p : points) {
    if (p.size() != family.vars().size()) throw std::invalid_argument("point has the wrong arity");
    for (const auto& g : family.generators()) rows.push_back(family.at_point(g, p));
  }
  DetectionResult d = solve_rows(family, rows);
  if (const auto* hit = std::get_if<Detected>(&d))
    for (const auto& p : points)
      for (const auto& g : family.generators())
        if (evaluate(family.at_params(g, hit->alpha), p) != 0)
          throw std::logic_error("detected parameters miss an input point");
  return d;
}

DetectionResult detect_in_ideal(const Family& family, const Ideal& curve) {
  require_linear(family);
  require_same_ring(family.vars(), curve.ring());
  const std::size_t m = family.params().size();
  const GroebnerBasis gb = groebner_basis(TermOrder::degrevlex(family.vars().size()), curve);
  const std::span<const Polynomial> divisors(gb.elements);
  std::vector<Polynomial> rows;
  for (const auto& g : family.generators()) {
    std::vector<Polynomial> parts = linear_parts(family, g);
    std::set<PowerProduct> support;
    for (auto& q : parts) {
      q = normal_form(gb.order, q, divisors);
      for (const auto& t : q.terms()) support.insert(t.pp);
    }
    for (const auto& pp : support) {
      std::vector<Term<Rational>> terms;
      if (const Rational* c = parts[0].coefficient(pp)) terms.push_back({PowerProduct(m), *c});
      for (std::size_t j = 0; j < m; ++j)
        if (const Rational* c = parts[j + 1].coefficient(pp)) {
          PowerProduct a(m);
          a.set(j, 1);
          terms.push_back({a, *c});
        }
      rows.push_back(Polynomial::from_terms(family.params(), std::move(terms)));
    }
  }
  DetectionResult d = solve_rows(family, rows);
  if (const auto* hit = std::get_if<Detected>(&d))
    for (const auto& g : family.generators())
      if (!normal_form(gb.order, family.at_params(g, hit->alpha), divisors).is_zero())
        throw std::logic_error("detected parameters leave the curve ideal");
  return d;
}

Polynomial reconstruct_surface(const Family& plane_template, const Ring& ring, std::size_t pivot,
                               const std::vector<SliceData>& slices, const TermOrder& order,
                               const MembershipOracle& oracle, int jobs) {
  require_linear(plane_template);
  if (plane_template.generators().size() != 1)
    throw std::invalid_argument("the curve template must have exactly one generator");
  if (pivot >= ring.size()) throw std::invalid_argument("pivot out of range");
  require_same_ring(ring.without(pivot), plane_template.vars());
  if (slices.empty()) throw std::invalid_argument("at least one slice is required");

  const TermOrder hat = order.restricted_without(pivot);
  const auto curves = parallel_map(slices.size(), jobs, [&](std::size_t k) {
    const SliceData& s = slices[k];
    const DetectionResult d = std::holds_alternative<Ideal>(s.data)
                                  ? detect_in_ideal(plane_template, std::get<Ideal>(s.data))
                                  : detect(plane_template, std::get<std::vector<Point>>(s.data));
    if (std::holds_alternative<DetectedNothing>(d))
      throw Inconsistent("slice " + std::to_string(k) + ": no curve of the template fits");
    if (std::holds_alternative<DetectedFamily>(d))
      throw Underdetermined("slice " + std::to_string(k) + ": the curve is not determined");
    const Polynomial curve = plane_template.at_params(plane_template.generators().front(), std::get<Detected>(d).alpha);
    if (curve.is_zero()) throw Underdetermined("slice " + std::to_string(k) + ": the detected curve is zero");
    return make_monic(hat, curve);
  });

  SliceFamily family{ring, pivot, std::vector<Rational>(ring.size(), Rational(0)), {}};
  std::vector<GroebnerBasis> bases;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    family.gammas.push_back(slices[k].gamma);
    GroebnerBasis b;
    b.order = hat;
    b.ring = plane_template.vars();
    b.elements = {curves[k]};
    b.is_minimal = b.is_reduced = true;
    bases.push_back(std::move(b));
  }
  const Reconstruction rec = reconstruct_gb(family, bases, order, oracle, jobs);
  return rec.basis.elements.front();
}

}  // namespace slicegb
