#include "slicegb/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "slicegb/poly_gcd.hpp"

namespace slicegb {

namespace {

std::vector<int> drop_map(std::size_t arity, std::size_t var) {
  std::vector<int> map(arity, -1);
  for (std::size_t j = 0; j < arity; ++j)
    if (j != var) map[j] = static_cast<int>(j < var ? j : j - 1);
  return map;
}

template <class K>
bool minimal_list(const TermOrder& order, const std::vector<BasicPolynomial<K>>& elems) {
  std::vector<PowerProduct> lts;
  for (const auto& g : elems) {
    if (!is_monic(order, g)) return false;
    lts.push_back(leading_term(order, g).pp);
  }
  for (std::size_t a = 0; a < lts.size(); ++a)
    for (std::size_t b = 0; b < lts.size(); ++b)
      if (a != b && lts[a].divides(lts[b])) return false;
  return true;
}

template <class K>
bool reduced_list(const TermOrder& order, const std::vector<BasicPolynomial<K>>& elems) {
  if (!minimal_list(order, elems)) return false;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    const PowerProduct lt = leading_term(order, elems[a]).pp;
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (a != b)
        for (const auto& t : elems[b].terms())
          if (lt.divides(t.pp)) return false;
  }
  return true;
}

TermOrder param_order(const Ring& params) { return TermOrder::degrevlex(params.size()); }

}  // namespace

Family::Family(Ring params, Ring vars, std::vector<Polynomial> generators)
    : params_(std::move(params)), vars_(std::move(vars)), joint_(vars_.with_prefix(params_.names())) {
  for (auto& g : generators) {
    require_same_ring(joint_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

ParamPolynomial Family::to_param(const Polynomial& f) const {
  require_same_ring(joint_, f.ring());
  const std::size_t m = params_.size();
  std::vector<std::pair<PowerProduct, Term<Rational>>> split;
  for (const auto& t : f.terms()) {
    PowerProduct a(m), x(vars_.size());
    for (std::size_t j = 0; j < m; ++j) a.set(j, t.pp[j]);
    for (std::size_t i = 0; i < vars_.size(); ++i) x.set(i, t.pp[m + i]);
    split.push_back({x, {a, t.coeff}});
  }
  std::stable_sort(split.begin(), split.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<Term<RationalFunction>> terms;
  for (std::size_t k = 0; k < split.size();) {
    std::vector<Term<Rational>> coeff;
    std::size_t e = k;
    for (; e < split.size() && split[e].first == split[k].first; ++e) coeff.push_back(split[e].second);
    terms.push_back({split[k].first, RationalFunction(Polynomial::from_terms(params_, std::move(coeff)))});
    k = e;
  }
  return ParamPolynomial::from_terms(vars_, std::move(terms));
}

Polynomial Family::at_params(const Polynomial& f, std::span<const Rational> alpha) const {
  require_same_ring(joint_, f.ring());
  if (alpha.size() != params_.size()) throw std::invalid_argument("parameter point has the wrong arity");
  std::vector<std::size_t> idx(params_.size());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  const Polynomial g = substitute_constants(f, idx, alpha);
  std::vector<int> map(joint_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) map[params_.size() + i] = static_cast<int>(i);
  return map_variables(g, vars_, map);
}

Polynomial Family::at_point(const Polynomial& f, std::span<const Rational> p) const {
  require_same_ring(joint_, f.ring());
  if (p.size() != vars_.size()) throw std::invalid_argument("point has the wrong arity");
  std::vector<std::size_t> idx(vars_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = params_.size() + i;
  const Polynomial g = substitute_constants(f, idx, p);
  std::vector<int> map(joint_.size(), -1);
  for (std::size_t j = 0; j < params_.size(); ++j) map[j] = static_cast<int>(j);
  return map_variables(g, params_, map);
}

unsigned Family::param_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_)
    for (const auto& t : g.terms()) {
      unsigned a = 0;
      for (std::size_t j = 0; j < params_.size(); ++j) a += t.pp[j];
      d = std::max(d, a);
    }
  return d;
}

ParamGroebnerBasis param_gb(const Family& family, const TermOrder& order, const GroebnerOptions& options) {
  if (order.arity() != family.vars().size()) throw std::invalid_argument("ordering arity does not match ring");
  std::vector<ParamPolynomial> gens;
  for (const auto& g : family.generators()) gens.push_back(family.to_param(g));
  ParamGroebnerBasis gb =
      reduce_basis(buchberger<RationalFunction>(order, family.vars(), gens, options), options);
  if (gb.is_unit()) throw DependentParameters("the extended ideal is the unit ideal");
  return gb;
}

Polynomial sigma_denominator(const ParamGroebnerBasis& basis) {
  std::optional<Polynomial> d;
  for (const auto& g : basis.elements)
    for (const auto& t : g.terms()) d = d ? polynomial_lcm(*d, t.coeff.denominator()) : t.coeff.denominator();
  if (!d) throw std::invalid_argument("empty basis has no parameter ring");
  return primitive_normalized(param_order(d->ring()), *d);
}

std::vector<RationalFunction> ncc_list(const ParamGroebnerBasis& basis) {
  std::vector<const ParamPolynomial*> elems;
  for (const auto& g : basis.elements) elems.push_back(&g);
  std::stable_sort(elems.begin(), elems.end(), [&](const ParamPolynomial* a, const ParamPolynomial* b) {
    return basis.order.compare(leading_term(basis.order, *a).pp, leading_term(basis.order, *b).pp) < 0;
  });
  std::vector<RationalFunction> out;
  for (const auto* g : elems)
    for (const auto& t : sorted_terms(basis.order, *g))
      if (!t.coeff.is_constant()) out.push_back(t.coeff);
  return out;
}

GroebnerBasis specialize_fiber(const ParamGroebnerBasis& basis, std::span<const Rational> alpha) {
  std::vector<Polynomial> elems;
  for (const auto& g : basis.elements) {
    std::vector<Term<Rational>> terms;
    for (const auto& t : g.terms()) terms.push_back({t.pp, t.coeff.evaluate(alpha)});
    elems.push_back(Polynomial::from_terms(basis.ring, std::move(terms)));
  }
  GroebnerBasis gb{basis.order, basis.ring, std::move(elems), false, false};
  gb.is_minimal = minimal_list(gb.order, gb.elements);
  gb.is_reduced = gb.is_minimal && reduced_list(gb.order, gb.elements);
  return gb;
}

Independence params_independent(const Family& family, const GroebnerOptions& options) {
  Independence out;
  std::vector<std::size_t> drop;
  for (std::size_t i = 0; i < family.vars().size(); ++i) drop.push_back(family.var_index(i));
  const Ideal elim = eliminate(family.ideal(), drop, options);
  out.independent = elim.is_zero();
  if (!out.independent)
    out.witness = primitive_normalized(param_order(family.params()),
                                       rename_into(elim.generators().front(), family.params()));
  bool unit = false;
  try {
    param_gb(family, TermOrder::degrevlex(family.vars().size()), options);
  } catch (const DependentParameters&) {
    unit = true;
  }
  out.agreement = out.independent == !unit;
  return out;
}

SigmaScheme sigma_scheme(const ParamGroebnerBasis& basis, bool implicitize, const GroebnerOptions& options) {
  SigmaScheme out;
  out.coordinates = ncc_list(basis);
  if (!implicitize) return out;
  if (out.coordinates.empty()) {
    out.dimension = 0;
    return out;
  }
  const Ring& params = out.coordinates.front().ring();
  const std::size_t m = params.size();
  const std::size_t s = out.coordinates.size();

  std::vector<std::string> ynames;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<std::string> used = params.names();
    used.insert(used.end(), ynames.begin(), ynames.end());
    std::string name = "y" + std::to_string(j + 1);
    if (std::find(used.begin(), used.end(), name) != used.end()) name = fresh_name(Ring(used), name);
    ynames.push_back(name);
  }
  out.ring = Ring(ynames);
  std::vector<std::string> base = params.names();
  base.insert(base.end(), ynames.begin(), ynames.end());
  const std::string tag = fresh_name(Ring(base), "t");
  const Ring work = Ring(base).with_prefix({tag});

  std::vector<int> from_params(m);
  for (std::size_t j = 0; j < m; ++j) from_params[j] = static_cast<int>(1 + j);
  Polynomial denominators = constant(params, 1);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < s; ++j) {
    const auto& q = out.coordinates[j];
    const Polynomial y = variable(work, 1 + m + j);
    gens.push_back(y * map_variables(q.denominator(), work, from_params) -
                   map_variables(q.numerator(), work, from_params));
    denominators = polynomial_lcm(denominators, q.denominator());
  }
  gens.push_back(constant(work, 1) - variable(work, 0) * map_variables(denominators, work, from_params));
  std::vector<std::size_t> drop;
  for (std::size_t j = 0; j <= m; ++j) drop.push_back(j);
  const Ideal elim = eliminate(Ideal(work, gens), drop, options);
  for (const auto& g : elim.generators()) out.implicit.push_back(rename_into(g, *out.ring));
  out.dimension = dimension(Ideal(*out.ring, out.implicit), TermOrder::degrevlex(s));
  return out;
}

ParamPolynomial apply_pi(const LinearForm& l, const ParamPolynomial& f) {
  const Ring& ring = f.ring();
  l.validate(ring.size());
  const Ring hat = ring.without(l.pivot);
  if (f.is_zero()) return ParamPolynomial(hat);
  const Ring& params = f.terms().front().coeff.ring();
  auto coeff = [&](const Rational& c) { return RationalFunction(params, c); };
  ParamPolynomial ell(ring, coeff(l.gamma));
  for (std::size_t j = l.pivot + 1; j < ring.size(); ++j)
    if (l.tail[j] != 0) ell += ParamPolynomial::variable(ring, j, coeff(l.tail[j]));
  return map_variables(substitute_var(f, l.pivot, ell), hat, drop_map(ring.size(), l.pivot));
}

FamilySection family_section(const Family& family, const LinearForm& l, const TermOrder& order,
                             const GroebnerOptions& options) {
  const std::size_t n = family.vars().size();
  l.validate(n);
  const std::size_t m = family.params().size();
  const TermOrder hat = order.restricted_without(l.pivot);

  // Sectioned generators in the joint ring.
  const Ring& joint = family.joint();
  Polynomial ell = constant(joint, l.gamma);
  for (std::size_t j = l.pivot + 1; j < n; ++j)
    if (l.tail[j] != 0) ell += variable(joint, m + j).scaled(l.tail[j]);
  const Ring joint_hat = joint.without(m + l.pivot);
  std::vector<Polynomial> gens;
  for (const auto& g : family.generators())
    gens.push_back(map_variables(substitute_var(g, m + l.pivot, ell), joint_hat, drop_map(joint.size(), m + l.pivot)));
  Family sectioned(family.params(), family.vars().without(l.pivot), std::move(gens));

  const ParamGroebnerBasis universal = param_gb(family, order, options);
  std::vector<ParamPolynomial> images;
  std::vector<std::size_t> offending;
  for (std::size_t j = 0; j < universal.elements.size(); ++j) {
    const ParamPolynomial& g = universal.elements[j];
    const PowerProduct lt = leading_term(order, g).pp;
    ParamPolynomial p = apply_pi(l, g);
    bool ok = lt[l.pivot] == 0 && !p.is_zero();
    if (ok) ok = leading_term(hat, p).pp == drop_variable(lt, l.pivot);
    if (!ok) offending.push_back(j);
    images.push_back(std::move(p));
  }

  Independence independence = params_independent(sectioned, options);
  FamilySection out{std::move(sectioned), ParamGroebnerBasis{hat, family.vars().without(l.pivot), {}, false, false},
                    offending.empty(), offending, independence};
  if (out.hypothesis_ok) {
    for (auto& p : images) out.basis.elements.push_back(make_monic(hat, p));
    std::stable_sort(out.basis.elements.begin(), out.basis.elements.end(),
                     [&](const ParamPolynomial& a, const ParamPolynomial& b) {
                       return hat.compare(leading_term(hat, a).pp, leading_term(hat, b).pp) < 0;
                     });
  } else if (independence.independent) {
    out.basis = param_gb(out.family, hat, options);
  }
  out.basis.is_minimal = minimal_list(hat, out.basis.elements);
  out.basis.is_reduced = out.basis.is_minimal && reduced_list(hat, out.basis.elements);
  return out;
}

}  // namespace slicegb
