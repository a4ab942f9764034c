#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slicegb/power_product.hpp"
#include "slicegb/rational.hpp"
#include "slicegb/ring.hpp"
#include "slicegb/term_order.hpp"

namespace slicegb {

template <class K>
struct Term {
  PowerProduct pp;
  K coeff;
};

/// Sparse multivariate polynomial over a coefficient field K.
///
/// Terms are stored in strictly decreasing canonical order (see
/// PowerProduct::operator<=>) with no zero coefficients, so equality is
/// structural and the representation does not depend on any term ordering.
/// Orderings are supplied per operation.
///
/// K needs +, -, *, /, unary -, ==, and free functions coeff_is_zero(K),
/// inverse(K), unit_like(K).
template <class K>
class BasicPolynomial {
 public:
  using Coeff = K;

  BasicPolynomial() = default;
  explicit BasicPolynomial(Ring ring) : ring_(std::move(ring)) {}
  BasicPolynomial(Ring ring, K constant) : ring_(std::move(ring)) {
    if (!coeff_is_zero(constant)) terms_.push_back({PowerProduct(ring_.size()), std::move(constant)});
  }

  /// Sorts, merges equal power products and drops zeros.
  static BasicPolynomial from_terms(Ring ring, std::vector<Term<K>> terms) {
    BasicPolynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.pp.arity() != p.ring_.size()) throw std::invalid_argument("term arity does not match ring");
    std::sort(terms.begin(), terms.end(),
              [](const Term<K>& a, const Term<K>& b) { return a.pp > b.pp; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().pp == t.pp) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (coeff_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!coeff_is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Terms must already be strictly decreasing canonically with nonzero
  /// coefficients.
  static BasicPolynomial from_sorted_terms(Ring ring, std::vector<Term<K>> terms) {
    BasicPolynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static BasicPolynomial variable(Ring ring, std::size_t var, K one) {
    if (var >= ring.size()) throw std::invalid_argument("variable index out of range");
    PowerProduct pp(ring.size());
    pp.set(var, 1);
    BasicPolynomial p(std::move(ring));
    p.terms_.push_back({pp, std::move(one)});
    return p;
  }

  static BasicPolynomial monomial(Ring ring, PowerProduct pp, K c) {
    BasicPolynomial p(std::move(ring));
    if (pp.arity() != p.ring_.size()) throw std::invalid_argument("term arity does not match ring");
    if (!coeff_is_zero(c)) p.terms_.push_back({std::move(pp), std::move(c)});
    return p;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term<K>> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().pp.is_one());
  }

  const K* coefficient(const PowerProduct& pp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), pp,
                               [](const Term<K>& t, const PowerProduct& q) { return t.pp > q; });
    if (it != terms_.end() && it->pp == pp) return &it->coeff;
    return nullptr;
  }

  /// Throws std::invalid_argument for the zero polynomial.
  unsigned total_degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.pp.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) throw std::invalid_argument("homogeneity of the zero polynomial");
    const unsigned d = terms_.front().pp.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term<K>& t) { return t.pp.degree() == d; });
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.pp[var]);
    return d;
  }
  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term<K>& t) { return t.pp[var] > 0; });
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = K(-t.coeff);
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    return combine(a, b, false);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return combine(a, b, true);
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return BasicPolynomial(a.ring_);
    std::vector<Term<K>> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.pp * t.pp, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(prod));
  }
  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  BasicPolynomial scaled(const K& c) const {
    if (coeff_is_zero(c)) return BasicPolynomial(ring_);
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  /// Multiplication by the monomial c * pp.
  BasicPolynomial times_term(const PowerProduct& pp, const K& c) const {
    if (coeff_is_zero(c)) return BasicPolynomial(ring_);
    BasicPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // Multiplying every power product by pp preserves the lexicographic order.
    for (const auto& t : terms_) r.terms_.push_back({t.pp * pp, t.coeff * c});
    return r;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].pp != b.terms_[i].pp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return a.ring_ == b.ring_ || a.is_zero();
  }

 private:
  static BasicPolynomial combine(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    BasicPolynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->pp > j->pp)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->pp > i->pp) {
        if (subtract)
          r.terms_.push_back({j->pp, K(-j->coeff)});
        else
          r.terms_.push_back(*j);
        ++j;
      } else {
        K c = i->coeff;
        if (subtract)
          c = c - j->coeff;
        else
          c = c + j->coeff;
        if (!coeff_is_zero(c)) r.terms_.push_back({i->pp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_;
  std::vector<Term<K>> terms_;
};

using Polynomial = BasicPolynomial<Rational>;

// ---------------------------------------------------------------------------
// Free functions shared by all coefficient fields.

/// The sigma-largest term. Throws std::invalid_argument on the zero polynomial.
template <class K>
const Term<K>& leading_term(const TermOrder& order, const BasicPolynomial<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const auto terms = f.terms();
  const Term<K>* best = &terms[0];
  for (const auto& t : terms.subspan(1))
    if (order.compare(t.pp, best->pp) > 0) best = &t;
  return *best;
}

/// Leading coefficient and leading power product.
template <class K>
std::pair<K, PowerProduct> leading_monomial(const TermOrder& order, const BasicPolynomial<K>& f) {
  const auto& t = leading_term(order, f);
  return {t.coeff, t.pp};
}

/// Terms in sigma-decreasing order.
template <class K>
std::vector<Term<K>> sorted_terms(const TermOrder& order, const BasicPolynomial<K>& f) {
  std::vector<Term<K>> v(f.terms().begin(), f.terms().end());
  std::sort(v.begin(), v.end(),
            [&](const Term<K>& a, const Term<K>& b) { return order.compare(a.pp, b.pp) > 0; });
  return v;
}

/// f / LC_sigma(f); zero stays zero.
template <class K>
BasicPolynomial<K> make_monic(const TermOrder& order, const BasicPolynomial<K>& f) {
  if (f.is_zero()) return f;
  return f.scaled(inverse(leading_term(order, f).coeff));
}

template <class K>
BasicPolynomial<K> pow(const BasicPolynomial<K>& f, long long e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (f.is_zero()) {
    if (e == 0) throw std::invalid_argument("0^0 is not supported");
    return f;
  }
  BasicPolynomial<K> result(f.ring(), unit_like(f.terms().front().coeff));
  BasicPolynomial<K> base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Ring homomorphism x_var -> g, x_j -> x_j (j != var).
template <class K>
BasicPolynomial<K> substitute_var(const BasicPolynomial<K>& f, std::size_t var,
                                  const BasicPolynomial<K>& g) {
  if (var >= f.ring().size()) throw std::invalid_argument("variable index out of range");
  require_same_ring(f.ring(), g.ring());
  // Group terms by the exponent of x_var: f = sum_e c_e(x) * x_var^e.
  unsigned max_e = f.degree_in(var);
  std::vector<std::vector<Term<K>>> slices(max_e + 1);
  for (const auto& t : f.terms()) {
    PowerProduct rest = t.pp;
    const unsigned e = rest[var];
    rest.set(var, 0);
    slices[e].push_back({rest, t.coeff});
  }
  BasicPolynomial<K> result(f.ring());
  std::optional<BasicPolynomial<K>> gpow;
  for (unsigned e = 0; e <= max_e; ++e) {
    if (e == 1)
      gpow = g;
    else if (e > 1)
      gpow = *gpow * g;
    if (slices[e].empty()) continue;
    auto part = BasicPolynomial<K>::from_terms(f.ring(), std::move(slices[e]));
    result += (e == 0) ? part : part * *gpow;
  }
  return result;
}

/// Re-indexes variables into `target`. map[i] is the target index of
/// variable i, or -1 if variable i must not occur in f.
template <class K>
BasicPolynomial<K> map_variables(const BasicPolynomial<K>& f, const Ring& target,
                                 std::span<const int> map) {
  if (map.size() != f.ring().size()) throw std::invalid_argument("variable map size mismatch");
  std::vector<Term<K>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    PowerProduct pp(target.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.pp[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("variable " + f.ring().name(i) + " cannot be mapped");
      pp.set(static_cast<std::size_t>(map[i]), pp[static_cast<std::size_t>(map[i])] + t.pp[i]);
    }
    out.push_back({pp, t.coeff});
  }
  return BasicPolynomial<K>::from_terms(target, std::move(out));
}

/// Maps f into `target` by variable name. Every variable occurring in f must
/// exist in `target`.
template <class K>
BasicPolynomial<K> rename_into(const BasicPolynomial<K>& f, const Ring& target) {
  std::vector<int> map(f.ring().size(), -1);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (auto j = target.index_of(f.ring().name(i))) map[i] = static_cast<int>(*j);
  return map_variables(f, target, map);
}

template <class K>
bool is_monic(const TermOrder& order, const BasicPolynomial<K>& f) {
  return !f.is_zero() && leading_term(order, f).coeff == unit_like(f.terms().front().coeff);
}

// ---------------------------------------------------------------------------
// Rational-only helpers.

struct DegreeInfo {
  unsigned degree = 0;
  bool homogeneous = true;
};

/// Total degree and homogeneity; throws on the zero polynomial.
DegreeInfo degree_info(const Polynomial& f);

inline Polynomial constant(const Ring& ring, const Rational& c) { return Polynomial(ring, c); }
inline Polynomial variable(const Ring& ring, std::size_t i) { return Polynomial::variable(ring, i, Rational(1)); }

/// Substitutes the constants values[i] for the variables listed in `vars`.
Polynomial substitute_constants(const Polynomial& f, std::span<const std::size_t> vars,
                                std::span<const Rational> values);

/// Full evaluation at a point of Q^n.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

/// Simultaneous substitution x_i -> images[i]; images live in a common ring.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> images);

/// Clears denominators and content: the integer-primitive multiple of f with
/// positive sigma-leading coefficient.
Polynomial primitive_normalized(const TermOrder& order, const Polynomial& f);

/// Exact quotient f / g for g | f; nullopt if g does not divide f.
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);

}  // namespace slicegb
