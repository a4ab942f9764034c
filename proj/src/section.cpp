#include "slicegb/section.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "slicegb/parallel.hpp"

namespace slicegb {

namespace {

std::vector<int> drop_map(std::size_t arity, std::size_t var) {
  std::vector<int> map(arity, -1);
  for (std::size_t j = 0; j < arity; ++j)
    if (j != var) map[j] = static_cast<int>(j < var ? j : j - 1);
  return map;
}

Polynomial drop_pivot(const Polynomial& f, std::size_t var) {
  const Ring target = f.ring().without(var);
  return map_variables(f, target, drop_map(f.ring().size(), var));
}

std::vector<Polynomial> sorted_by_lt(const TermOrder& order, std::vector<Polynomial> elems) {
  std::stable_sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_term(order, a).pp, leading_term(order, b).pp) < 0;
  });
  return elems;
}

bool ideal_generators_in(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& basis,
                         const TermOrder& order) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& f) {
    return normal_form<Rational>(order, f, basis).is_zero();
  });
}

bool is_groebner(const TermOrder& order, const std::vector<Polynomial>& elems) {
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      const auto& ta = leading_term(order, elems[a]).pp;
      const auto& tb = leading_term(order, elems[b]).pp;
      if (coprime(ta, tb)) continue;
      if (!normal_form<Rational>(order, s_polynomial<Rational>(order, elems[a], elems[b]), elems).is_zero())
        return false;
    }
  return true;
}

GroebnerBasis make_basis(const TermOrder& order, const Ring& ring, std::vector<Polynomial> elems) {
  GroebnerBasis gb{order, ring, sorted_by_lt(order, std::move(elems)), false, false};
  gb.is_minimal = is_minimal_basis(order, gb.elements);
  gb.is_reduced = gb.is_minimal && is_reduced_basis(order, gb.elements);
  return gb;
}

// Gamma sequence 2, -2, 3, -3, ... shifted by SLICEGB_SEED.
Rational nth_gamma(std::size_t k) {
  long offset = 0;
  if (const char* s = std::getenv("SLICEGB_SEED")) offset = std::strtol(s, nullptr, 10) % 1000;
  if (offset < 0) offset = -offset;
  const long magnitude = 2 + offset + static_cast<long>(k / 2);
  return Rational(k % 2 == 0 ? magnitude : -magnitude);
}

struct JointRing {
  Ring ring;
  std::vector<int> from_params;
  std::vector<int> from_x;
};

// Parameters first, then the listed x variables; clashing parameter names are
// renamed.
JointRing joint_ring(const Ring& params, const std::vector<std::string>& xs) {
  std::vector<std::string> names;
  JointRing out;
  for (std::size_t j = 0; j < params.size(); ++j) {
    std::string name = params.name(j);
    const bool clash = std::find(xs.begin(), xs.end(), name) != xs.end() ||
                       std::find(names.begin(), names.end(), name) != names.end();
    if (clash) {
      std::vector<std::string> all = names;
      all.insert(all.end(), xs.begin(), xs.end());
      name = fresh_name(Ring(all), name);
    }
    out.from_params.push_back(static_cast<int>(names.size()));
    names.push_back(name);
  }
  for (const auto& x : xs) {
    out.from_x.push_back(static_cast<int>(names.size()));
    names.push_back(x);
  }
  out.ring = Ring(names);
  return out;
}

void check_deadline(const GroebnerOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
    throw ResourceLimit("deadline exceeded");
}

}  // namespace

// ---------------------------------------------------------------------------
// Linear forms

LinearForm LinearForm::axis(std::size_t arity, std::size_t pivot, Rational gamma) {
  LinearForm l;
  l.pivot = pivot;
  l.tail.assign(arity, Rational(0));
  l.gamma = std::move(gamma);
  l.validate(arity);
  return l;
}

void LinearForm::validate(std::size_t arity) const {
  if (pivot >= arity) throw std::invalid_argument("pivot out of range");
  if (tail.size() != arity) throw std::invalid_argument("linear form arity does not match ring");
  for (std::size_t j = 0; j <= pivot; ++j)
    if (tail[j] != 0) throw std::invalid_argument("linear form tail must only involve variables after the pivot");
}

bool LinearForm::axis_aligned() const {
  return std::all_of(tail.begin(), tail.end(), [](const Rational& c) { return c == 0; });
}

Polynomial LinearForm::ell(const Ring& ring) const {
  validate(ring.size());
  Polynomial out = constant(ring, gamma);
  for (std::size_t j = pivot + 1; j < ring.size(); ++j)
    if (tail[j] != 0) out += variable(ring, j).scaled(tail[j]);
  return out;
}

Polynomial LinearForm::polynomial(const Ring& ring) const { return variable(ring, pivot) - ell(ring); }

void HomLinearForm::validate(std::size_t arity) const {
  if (pivot >= arity) throw std::invalid_argument("pivot out of range");
  if (coeffs.size() != arity) throw std::invalid_argument("linear form arity does not match ring");
  if (coeffs[pivot] != 0) throw std::invalid_argument("homogeneous linear form must not involve the pivot");
}

Polynomial HomLinearForm::ell(const Ring& ring) const {
  validate(ring.size());
  Polynomial out(ring);
  for (std::size_t j = 0; j < ring.size(); ++j)
    if (coeffs[j] != 0) out += variable(ring, j).scaled(coeffs[j]);
  return out;
}

Polynomial apply_pi(const LinearForm& l, const Polynomial& f) {
  return drop_pivot(substitute_var(f, l.pivot, l.ell(f.ring())), l.pivot);
}

Polynomial apply_pi(const HomLinearForm& l, const Polynomial& f) {
  return drop_pivot(substitute_var(f, l.pivot, l.ell(f.ring())), l.pivot);
}

PowerProduct drop_variable(const PowerProduct& t, std::size_t var) {
  if (var >= t.arity()) throw std::invalid_argument("variable index out of range");
  if (t[var] != 0) throw std::invalid_argument("power product involves the dropped variable");
  PowerProduct out(t.arity() - 1);
  for (std::size_t j = 0; j < t.arity(); ++j)
    if (j != var) out.set(j < var ? j : j - 1, t[j]);
  return out;
}

PowerProduct insert_variable(const PowerProduct& t, std::size_t var) {
  if (var > t.arity()) throw std::invalid_argument("variable index out of range");
  PowerProduct out(t.arity() + 1);
  for (std::size_t j = 0; j < t.arity(); ++j) out.set(j < var ? j : j + 1, t[j]);
  return out;
}

Polynomial theta(const HomLinearForm& l, const Polynomial& f) {
  return substitute_var(f, l.pivot, variable(f.ring(), l.pivot) + l.ell(f.ring()));
}

Polynomial rho(std::size_t pivot, const Polynomial& f) {
  if (pivot >= f.ring().size()) throw std::invalid_argument("pivot out of range");
  std::vector<Term<Rational>> kept;
  for (const auto& t : f.terms())
    if (t.pp[pivot] == 0) kept.push_back(t);
  return drop_pivot(Polynomial::from_terms(f.ring(), std::move(kept)), pivot);
}

bool is_minimal_basis(const TermOrder& order, const std::vector<Polynomial>& elems) {
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

bool is_reduced_basis(const TermOrder& order, const std::vector<Polynomial>& elems) {
  if (!is_minimal_basis(order, elems)) return false;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    const PowerProduct lt = leading_term(order, elems[a]).pp;
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : elems[b].terms())
        if (lt.divides(t.pp)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sections

GroebnerBasis homogeneous_section_gb(const Ideal& ideal, const HomLinearForm& l, const TermOrder& order) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.size();
  l.validate(n);
  if (order.arity() != n) throw std::invalid_argument("ordering arity does not match ring");
  const bool degrev_type = (order.kind() == OrderKind::XiDegRev && order.parameter() == l.pivot) ||
                           (order.kind() == OrderKind::DegRevLex && l.pivot + 1 == n);
  if (!degrev_type) throw std::invalid_argument("ordering is not of DegRev type for the pivot");
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");

  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators()) moved.push_back(theta(l, g));
  const GroebnerBasis gb = groebner_basis(order, Ideal(ring, moved));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements)
    if (Polynomial r = rho(l.pivot, g); !r.is_zero()) out.push_back(make_monic(order.restricted_without(l.pivot), r));
  return make_basis(order.restricted_without(l.pivot), ring.without(l.pivot), std::move(out));
}

SectionReport section_gb(const GroebnerBasis& basis, const LinearForm& l) {
  const std::size_t n = basis.ring.size();
  l.validate(n);
  const TermOrder hat = basis.order.restricted_without(l.pivot);
  SectionReport report;
  std::vector<Polynomial> images;
  std::vector<std::size_t> offending;
  for (std::size_t j = 0; j < basis.elements.size(); ++j) {
    const Polynomial& g = basis.elements[j];
    const PowerProduct lt = leading_term(basis.order, g).pp;
    Polynomial p = apply_pi(l, g);
    const bool ok = lt[l.pivot] == 0 && !p.is_zero() && leading_term(hat, p).pp == drop_variable(lt, l.pivot);
    report.lt_preserved.push_back(ok);
    if (!ok) offending.push_back(j);
    images.push_back(std::move(p));
  }
  if (!offending.empty()) {
    std::string what = "leading term not preserved by the section for element(s)";
    for (std::size_t j : offending) what += " " + std::to_string(j);
    throw HypothesisViolation(what, std::move(offending));
  }
  for (auto& p : images) p = make_monic(hat, p);
  report.section = make_basis(hat, basis.ring.without(l.pivot), std::move(images));
  report.nonzerodivisor = true;
  return report;
}

GroebnerBasis verify_lifting(const Ideal& ideal, const std::vector<Polynomial>& g, const LinearForm& l,
                             const TermOrder& order) {
  const Ring& ring = ideal.ring();
  l.validate(ring.size());
  if (order.arity() != ring.size()) throw std::invalid_argument("ordering arity does not match ring");
  const TermOrder hat = order.restricted_without(l.pivot);

  std::vector<Polynomial> images;
  std::vector<std::size_t> offending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    require_same_ring(ring, g[j].ring());
    if (g[j].is_zero()) throw std::invalid_argument("zero polynomial in lifted basis");
    const PowerProduct lt = leading_term(order, g[j]).pp;
    Polynomial p = apply_pi(l, g[j]);
    if (lt[l.pivot] != 0 || p.is_zero() || leading_term(hat, p).pp != drop_variable(lt, l.pivot))
      offending.push_back(j);
    images.push_back(std::move(p));
  }
  if (!offending.empty()) {
    std::string what = "leading term not preserved by the section for element(s)";
    for (std::size_t j : offending) what += " " + std::to_string(j);
    throw HypothesisViolation(what, std::move(offending));
  }

  std::vector<Polynomial> section_gens;
  for (const auto& f : ideal.generators()) section_gens.push_back(apply_pi(l, f));
  if (!is_groebner(hat, images) || !ideal_generators_in(section_gens, images, hat))
    throw NotSectionBasis("the section of the candidate is not a Groebner basis of the section ideal");

  const GroebnerBasis reference = groebner_basis(TermOrder::degrevlex(ring.size()), ideal);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (!is_member(g[j], reference))
      throw MembershipFailed("candidate element " + std::to_string(j) + " is not in the ideal");

  if (is_zero_divisor(l.polynomial(ring), ideal))
    throw ZeroDivisor("the linear form divides zero modulo the ideal");

  std::vector<Polynomial> monic;
  for (const auto& f : g) monic.push_back(make_monic(order, f));
  return make_basis(order, ring, std::move(monic));
}

// ---------------------------------------------------------------------------
// Common lifting and reconstruction

SliceFamily SliceFamily::axis(const Ring& ring, std::size_t pivot, std::vector<Rational> gammas) {
  SliceFamily s{ring, pivot, std::vector<Rational>(ring.size(), Rational(0)), std::move(gammas)};
  s.validate();
  return s;
}

void SliceFamily::validate() const {
  LinearForm{pivot, tail, Rational(0)}.validate(ring.size());
  if (gammas.empty()) throw std::invalid_argument("slice family needs at least one offset");
  for (std::size_t a = 0; a < gammas.size(); ++a)
    for (std::size_t b = a + 1; b < gammas.size(); ++b)
      if (gammas[a] == gammas[b]) throw std::invalid_argument("slice offsets must be distinct");
}

bool SliceFamily::axis_aligned() const {
  return std::all_of(tail.begin(), tail.end(), [](const Rational& c) { return c == 0; });
}

LinearForm SliceFamily::form(std::size_t k) const { return LinearForm{pivot, tail, gammas.at(k)}; }

Polynomial common_lifting(const SliceFamily& slices, const std::vector<Polynomial>& values, int jobs) {
  slices.validate();
  const std::size_t count = slices.gammas.size();
  if (values.size() != count) throw std::invalid_argument("one slice value per offset is required");
  const Ring hat = slices.section_ring();
  for (const auto& v : values) require_same_ring(hat, v.ring());

  std::set<PowerProduct> support;
  for (const auto& v : values)
    for (const auto& t : v.terms()) support.insert(t.pp);
  std::vector<PowerProduct> pps(support.begin(), support.end());
  std::vector<std::vector<Rational>> rows(pps.size(), std::vector<Rational>(count));
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t r = 0; r < pps.size(); ++r)
      if (const Rational* c = values[k].coefficient(pps[r])) rows[r][k] = *c;

  const auto coeffs = jobs > 1 ? interpolate_rows_parallel(slices.gammas, rows, jobs)
                               : interpolate_rows_serial(slices.gammas, rows);

  // h(y, x-hat) with y = x_i - tail.
  std::vector<Term<Rational>> terms;
  for (std::size_t r = 0; r < pps.size(); ++r) {
    const PowerProduct base = insert_variable(pps[r], slices.pivot);
    for (std::size_t e = 0; e < count; ++e) {
      if (coeffs[r][e] == 0) continue;
      PowerProduct pp = base;
      pp.set(slices.pivot, static_cast<unsigned>(e));
      terms.push_back({pp, coeffs[r][e]});
    }
  }
  const Polynomial h = Polynomial::from_terms(slices.ring, std::move(terms));
  if (slices.axis_aligned()) return h;
  const Polynomial shift = LinearForm{slices.pivot, slices.tail, Rational(0)}.polynomial(slices.ring);
  return substitute_var(h, slices.pivot, shift);
}

bool oracle_accepts(const MembershipOracle& oracle, const Polynomial& g) {
  if (const auto* check = std::get_if<GBCheck>(&oracle)) return is_member(g, check->basis);
  if (const auto* param = std::get_if<Parametric>(&oracle)) {
    if (param->coordinates.size() != g.ring().size())
      throw std::invalid_argument("parametrization arity does not match ring");
    return compose(g, param->coordinates).is_zero();
  }
  return true;
}

Reconstruction reconstruct_gb(const SliceFamily& slices, const std::vector<GroebnerBasis>& slice_bases,
                              const TermOrder& order, const MembershipOracle& oracle, int jobs) {
  slices.validate();
  if (slice_bases.size() != slices.gammas.size())
    throw std::invalid_argument("one slice basis per offset is required");
  if (order.arity() != slices.ring.size()) throw std::invalid_argument("ordering arity does not match ring");
  const TermOrder hat = order.restricted_without(slices.pivot);
  const Ring hat_ring = slices.section_ring();

  std::vector<std::vector<Polynomial>> sorted;
  for (const auto& b : slice_bases) {
    require_same_ring(hat_ring, b.ring);
    std::vector<Polynomial> elems;
    for (const auto& g : b.elements) {
      if (g.is_zero()) throw std::invalid_argument("zero polynomial in slice basis");
      elems.push_back(make_monic(hat, g));
    }
    sorted.push_back(sorted_by_lt(hat, std::move(elems)));
  }
  auto lts = [&](const std::vector<Polynomial>& elems) {
    std::vector<PowerProduct> out;
    for (const auto& g : elems) out.push_back(leading_term(hat, g).pp);
    return out;
  };
  const std::vector<PowerProduct> signature = lts(sorted.front());
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (lts(sorted[k]) != signature)
      throw NonGenericSlices("slice " + std::to_string(k) + " has different leading terms than slice 0");

  const auto lifted = parallel_map(signature.size(), jobs, [&](std::size_t j) {
    std::vector<Polynomial> values;
    for (const auto& elems : sorted) values.push_back(elems[j]);
    return common_lifting(slices, values);
  });

  std::vector<Polynomial> elems;
  for (std::size_t j = 0; j < lifted.size(); ++j) {
    const Polynomial& g = lifted[j];
    if (g.is_zero() || leading_term(order, g).pp != insert_variable(signature[j], slices.pivot))
      throw LTDrift("lifted element " + std::to_string(j) + " has the wrong leading term; more slices are needed");
    if (!oracle_accepts(oracle, g))
      throw MembershipFailed("lifted element " + std::to_string(j) + " is not in the ideal");
    elems.push_back(make_monic(order, g));
  }
  Reconstruction out;
  out.basis = make_basis(order, slices.ring, std::move(elems));
  out.certified = !std::holds_alternative<Trust>(oracle);
  return out;
}

std::vector<GroebnerBasis> slice_bases(const SliceFamily& slices, const std::vector<Polynomial>& generators,
                                       const TermOrder& order, int jobs) {
  slices.validate();
  const TermOrder hat = order.restricted_without(slices.pivot);
  const Ring hat_ring = slices.section_ring();
  return parallel_map(slices.gammas.size(), jobs, [&](std::size_t k) {
    const LinearForm l = slices.form(k);
    std::vector<Polynomial> gens;
    for (const auto& f : generators) gens.push_back(apply_pi(l, f));
    return groebner_basis(hat, Ideal(hat_ring, std::move(gens)));
  });
}

// ---------------------------------------------------------------------------
// Implicitization

namespace {

Polynomial principal_generator(const Ideal& ideal) {
  if (ideal.generators().size() != 1) throw NonPrincipal("elimination ideal is not principal");
  return ideal.generators().front();
}

Polynomial implicit_by_elimination(const Ring& xring, const std::vector<Polynomial>& param,
                                   const GroebnerOptions& options) {
  const Ring& pring = param.front().ring();
  const JointRing joint = joint_ring(pring, xring.names());
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < xring.size(); ++j)
    gens.push_back(variable(joint.ring, static_cast<std::size_t>(joint.from_x[j])) -
                   map_variables(param[j], joint.ring, joint.from_params));
  std::vector<std::size_t> drop;
  for (int v : joint.from_params) drop.push_back(static_cast<std::size_t>(v));
  const Ideal elim = eliminate(Ideal(joint.ring, gens), drop, options);
  return rename_into(principal_generator(elim), xring);
}

// Monic slice curve at x_pivot = gamma, or nullopt when degenerate.
std::optional<Polynomial> slice_curve(const Ring& xring, const std::vector<Polynomial>& param, std::size_t pivot,
                                      const Rational& gamma, const TermOrder& hat, const GroebnerOptions& options) {
  const Ring hat_ring = xring.without(pivot);
  const Ring& pring = param.front().ring();
  const JointRing joint = joint_ring(pring, hat_ring.names());
  std::vector<Polynomial> gens;
  for (std::size_t j = 0, h = 0; j < xring.size(); ++j) {
    const Polynomial p = map_variables(param[j], joint.ring, joint.from_params);
    if (j == pivot)
      gens.push_back(p - constant(joint.ring, gamma));
    else
      gens.push_back(variable(joint.ring, static_cast<std::size_t>(joint.from_x[h++])) - p);
  }
  std::vector<std::size_t> drop;
  for (int v : joint.from_params) drop.push_back(static_cast<std::size_t>(v));
  GroebnerOptions modular = options;
  modular.modular = true;
  std::vector<Polynomial> curve;
  const Ideal candidate = eliminate(Ideal(joint.ring, gens), drop, modular);
  for (const auto& g : candidate.generators()) curve.push_back(rename_into(g, hat_ring));

  // The modular basis spans at least the elimination ideal; equality needs
  // every curve generator to vanish on the parametrized slice.
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < xring.size(); ++j)
    if (j != pivot) images.push_back(param[j]);
  const std::vector<Polynomial> slice{param[pivot] - constant(pring, gamma)};
  const TermOrder porder = TermOrder::degrevlex(pring.size());
  const bool exact = std::all_of(curve.begin(), curve.end(), [&](const Polynomial& g) {
    return normal_form<Rational>(porder, compose(g, images), slice).is_zero();
  });
  if (!exact) {
    curve.clear();
    const Ideal elim = eliminate(Ideal(joint.ring, gens), drop, options);
    for (const auto& g : elim.generators()) curve.push_back(rename_into(g, hat_ring));
  }
  if (curve.size() != 1) return std::nullopt;
  if (curve.front().is_constant()) return std::nullopt;
  return make_monic(hat, curve.front());
}

std::size_t default_slice_count(const std::vector<Polynomial>& param, std::size_t pivot) {
  std::size_t bound = 1;
  for (std::size_t j = 0; j < param.size(); ++j) {
    if (j == pivot) continue;
    const std::size_t d = param[j].is_zero() ? 1 : std::max<std::size_t>(1, param[j].total_degree());
    bound *= d;
  }
  return bound + 1;
}

}  // namespace

ImplicitizeResult implicitize(const Ring& xring, const std::vector<Polynomial>& param, const TermOrder& order,
                              const ImplicitizeOptions& options) {
  if (param.size() != xring.size()) throw std::invalid_argument("one parametric coordinate per variable is required");
  if (param.empty()) throw std::invalid_argument("empty parametrization");
  for (const auto& p : param) require_same_ring(param.front().ring(), p.ring());
  if (param.front().ring().size() + 1 != xring.size())
    throw std::invalid_argument("hypersurface parametrization needs one parameter fewer than coordinates");
  if (order.arity() != xring.size()) throw std::invalid_argument("ordering arity does not match ring");

  ImplicitizeResult result;
  if (options.mode == ImplicitMode::Eliminate) {
    result.equation = primitive_normalized(order, implicit_by_elimination(xring, param, options.groebner));
    return result;
  }

  const std::size_t pivot = options.pivot;
  if (pivot >= xring.size()) throw std::invalid_argument("pivot out of range");
  const TermOrder hat = order.restricted_without(pivot);
  std::size_t target = options.gammas.empty() ? options.slices.value_or(default_slice_count(param, pivot))
                                              : options.gammas.size();
  if (target == 0) throw std::invalid_argument("at least one slice is required");

  std::vector<Rational> candidates = options.gammas;
  std::size_t next_gamma = 0;
  auto more_gammas = [&](std::size_t count) {
    while (count > 0) {
      Rational g = nth_gamma(next_gamma++);
      if (std::find(candidates.begin(), candidates.end(), g) != candidates.end()) continue;
      candidates.push_back(g);
      --count;
    }
  };
  if (candidates.size() < target) more_gammas(target - candidates.size());

  std::map<std::size_t, std::optional<Polynomial>> curves;  // by candidate index
  const MembershipOracle oracle = Parametric{param};
  for (int attempt = 0;; ++attempt) {
    std::vector<std::size_t> good;
    for (;;) {
      check_deadline(options.groebner);
      std::vector<std::size_t> todo;
      for (std::size_t k = 0; k < candidates.size(); ++k)
        if (!curves.count(k)) todo.push_back(k);
      const auto computed = parallel_map(todo.size(), options.jobs, [&](std::size_t t) {
        return slice_curve(xring, param, pivot, candidates[todo[t]], hat, options.groebner);
      });
      for (std::size_t t = 0; t < todo.size(); ++t) curves[todo[t]] = computed[t];

      // Majority leading term among nondegenerate slices.
      std::map<PowerProduct, std::size_t> votes;
      for (const auto& [k, c] : curves)
        if (c) ++votes[leading_term(hat, *c).pp];
      std::optional<PowerProduct> winner;
      std::size_t best = 0;
      for (const auto& [pp, v] : votes)
        if (v > best) best = v, winner = pp;
      good.clear();
      for (const auto& [k, c] : curves)
        if (c && winner && leading_term(hat, *c).pp == *winner) good.push_back(k);
      if (good.size() >= target) break;
      if (!options.gammas.empty())
        throw NonGenericSlices("explicit offsets give too few nondegenerate slices");
      if (candidates.size() > 64 * target) throw ResourceLimit("too many degenerate slices");
      more_gammas(target - good.size());
    }
    good.resize(target);

    SliceFamily family{xring, pivot, std::vector<Rational>(xring.size(), Rational(0)), {}};
    std::vector<GroebnerBasis> bases;
    for (std::size_t k : good) {
      family.gammas.push_back(candidates[k]);
      bases.push_back(GroebnerBasis{hat, xring.without(pivot), {*curves[k]}, true, true});
    }
    try {
      const Reconstruction rec = reconstruct_gb(family, bases, order, oracle, options.jobs);
      if (rec.basis.elements.size() != 1) throw NonPrincipal("reconstructed ideal is not principal");
      result.equation = primitive_normalized(order, rec.basis.elements.front());
      result.slices_used = target;
      result.gammas = family.gammas;
      return result;
    } catch (const LTDrift&) {
      if (attempt >= options.max_doublings || !options.gammas.empty()) throw ResourceLimit("slice count limit reached");
    } catch (const MembershipFailed&) {
      if (attempt >= options.max_doublings || !options.gammas.empty()) throw ResourceLimit("slice count limit reached");
    }
    target *= 2;
  }
}

}  // namespace slicegb
