#include "slicegb/poly_gcd.hpp"

#include <stdexcept>

namespace slicegb {

namespace {

Polynomial monic_drl(const Polynomial& f) { return make_monic(TermOrder::degrevlex(f.ring().size()), f); }

std::optional<std::size_t> first_variable(const Polynomial& f, const Polynomial& g) {
  std::optional<std::size_t> best;
  for (const auto* p : {&f, &g})
    for (const auto& t : p->terms())
      for (std::size_t i = 0; i < t.pp.arity(); ++i)
        if (t.pp[i] > 0) {
          if (!best || i < *best) best = i;
          break;
        }
  return best;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  auto q = exact_quotient(f, g);
  if (!q) throw std::logic_error("inexact division in gcd computation");
  return *q;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g);

/// gcd of the coefficients of f with respect to x_var.
Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial c(f.ring());
  for (const auto& k : coefficients_in(f, var)) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? monic_drl(k) : gcd_rec(c, k);
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial primitive_in(const Polynomial& f, std::size_t var) {
  const Polynomial c = content_in(f, var);
  return c.is_constant() ? f : divide_exact(f, c);
}

/// Pseudo-remainder of a by b with respect to x_var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lb = coefficients_in(b, var)[db];
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const unsigned da = a.degree_in(var);
    const Polynomial la = coefficients_in(a, var)[da];
    PowerProduct shift(a.ring().size());
    shift.set(var, da - db);
    a = lb * a - la * b.times_term(shift, Rational(1));
  }
  return a;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return monic_drl(g);
  if (g.is_zero()) return monic_drl(f);
  if (f.is_constant() || g.is_constant()) return constant(f.ring(), 1);
  const std::size_t v = *first_variable(f, g);
  if (!f.involves(v)) return gcd_rec(f, content_in(g, v));
  if (!g.involves(v)) return gcd_rec(content_in(f, v), g);

  const Polynomial cf = content_in(f, v);
  const Polynomial cg = content_in(g, v);
  const Polynomial c = gcd_rec(cf, cg);
  Polynomial a = cf.is_constant() ? f : divide_exact(f, cf);
  Polynomial b = cg.is_constant() ? g : divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    const Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) return c;
    a = std::move(b);
    b = primitive_in(r, v);
  }
  return monic_drl(c * primitive_in(b, v));
}

}  // namespace

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  if (var >= f.ring().size()) throw std::invalid_argument("variable index out of range");
  std::vector<std::vector<Term<Rational>>> parts(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    PowerProduct rest = t.pp;
    const unsigned e = rest[var];
    rest.set(var, 0);
    parts[e].push_back({rest, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(f.ring(), std::move(p)));
  return out;
}

Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  return gcd_rec(f, g);
}

Polynomial polynomial_lcm(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const Polynomial d = polynomial_gcd(f, g);
  return monic_drl(divide_exact(f, d) * g);
}

}  // namespace slicegb
