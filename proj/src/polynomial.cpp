#include "slicegb/polynomial.hpp"

#include <stdexcept>

namespace slicegb {

DegreeInfo degree_info(const Polynomial& f) { return {f.total_degree(), f.is_homogeneous()}; }

Polynomial substitute_constants(const Polynomial& f, std::span<const std::size_t> vars,
                                std::span<const Rational> values) {
  if (vars.size() != values.size()) throw std::invalid_argument("substitution size mismatch");
  for (std::size_t v : vars)
    if (v >= f.ring().size()) throw std::invalid_argument("variable index out of range");
  // Powers are cached per variable to keep this linear in the term count.
  std::vector<std::vector<Rational>> powers(vars.size());
  std::vector<Term<Rational>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    PowerProduct pp = t.pp;
    Rational c = t.coeff;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const unsigned e = pp[vars[k]];
      if (e == 0) continue;
      auto& pw = powers[k];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * values[k]);
      c *= pw[e];
      pp.set(vars[k], 0);
    }
    out.push_back({pp, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.ring().size()) throw std::invalid_argument("point arity does not match ring");
  std::vector<std::size_t> vars(point.size());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  Polynomial c = substitute_constants(f, vars, point);
  return c.is_zero() ? Rational(0) : c.terms().front().coeff;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.ring().size()) throw std::invalid_argument("one image per variable required");
  if (images.empty()) throw std::invalid_argument("empty composition");
  const Ring& target = images.front().ring();
  for (const auto& g : images) require_same_ring(g.ring(), target);
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial m(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const unsigned e = t.pp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(images[i]);
      while (pw.size() < e) pw.push_back(pw.back() * images[i]);
      m = m * pw[e - 1];
    }
    result += m;
  }
  return result;
}

Polynomial primitive_normalized(const TermOrder& order, const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : f.terms()) {
    Integer n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(leading_term(order, f).coeff) < 0) scale = -scale;
  return f.scaled(scale);
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const TermOrder lex = TermOrder::lex(f.ring().size());
  const auto& lg = leading_term(lex, g);
  // Quotient terms are produced in decreasing lexicographic order.
  std::vector<Term<Rational>> q;
  Polynomial r = f;
  while (!r.is_zero()) {
    // The canonical storage order is lexicographic, so the first term leads.
    const auto& lr = r.terms().front();
    if (!lg.pp.divides(lr.pp)) return std::nullopt;
    const PowerProduct m = lr.pp.divided_by(lg.pp);
    const Rational c = lr.coeff / lg.coeff;
    r -= g.times_term(m, c);
    q.push_back({m, c});
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(q));
}

}  // namespace slicegb
