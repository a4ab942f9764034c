// Template definitions for the Groebner engine. Included by the translation
// units that instantiate it for a coefficient field.
#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <type_traits>

#include "slicegb/groebner.hpp"

namespace slicegb::detail {

template <class K>
using TermVec = std::vector<Term<K>>;

template <class K>
struct FractionFree : std::false_type {};
template <>
struct FractionFree<Rational> : std::true_type {};

/// Divides out the integer content and clears denominators; positive leading
/// coefficient.
inline void remove_content(TermVec<Rational>& v) {
  if (v.empty()) return;
  Integer den_lcm = 1;
  for (const auto& t : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : v) {
    Integer n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (den_lcm == 1 && num_gcd == 1 && sgn(v.front().coeff) > 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(v.front().coeff) < 0) scale = -scale;
  for (auto& t : v) t.coeff *= scale;
}

/// Divides both term lists by the gcd of all their integer coefficients.
inline void divide_common_content(TermVec<Rational>& a, TermVec<Rational>& b) {
  Integer g = 0;
  for (const auto* v : {&a, &b})
    for (const auto& t : *v) {
      if (t.coeff.get_den() != 1) return;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
      if (g == 1) return;
    }
  if (g <= 1) return;
  for (auto* v : {&a, &b})
    for (auto& t : *v) t.coeff /= g;
}

class Clock {
 public:
  explicit Clock(const GroebnerOptions& opt) : deadline_(opt.deadline) {}
  void tick() {
    if (deadline_ && (++steps_ & 127) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw ResourceLimit("Groebner basis computation exceeded the time limit");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t steps_ = 0;
};

/// a*ta*p[ps..] - b*tb*g[gs..], both inputs sigma-decreasing.
template <class K>
TermVec<K> combine(const TermOrder& order, const K* a, const PowerProduct& ta, const TermVec<K>& p, std::size_t ps,
                   const K& b, const PowerProduct& tb, const TermVec<K>& g, std::size_t gs) {
  TermVec<K> out;
  out.reserve((p.size() - std::min(ps, p.size())) + (g.size() - std::min(gs, g.size())));
  const bool ta_one = ta.is_one();
  const bool tb_one = tb.is_one();
  auto scale_p = [&](const Term<K>& t) -> Term<K> {
    PowerProduct pp = ta_one ? t.pp : t.pp * ta;
    if (a) return {std::move(pp), K(t.coeff * *a)};
    return {std::move(pp), t.coeff};
  };
  std::size_t i = ps;
  std::size_t j = gs;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(scale_p(p[i++]));
      continue;
    }
    PowerProduct gpp = tb_one ? g[j].pp : g[j].pp * tb;
    if (i == p.size()) {
      out.push_back({std::move(gpp), K(-(b * g[j].coeff))});
      ++j;
      continue;
    }
    const PowerProduct ppp = ta_one ? p[i].pp : p[i].pp * ta;
    const auto c = order.compare(ppp, gpp);
    if (c > 0) {
      out.push_back(scale_p(p[i++]));
    } else if (c < 0) {
      out.push_back({std::move(gpp), K(-(b * g[j].coeff))});
      ++j;
    } else {
      K coeff = a ? K(p[i].coeff * *a) : p[i].coeff;
      coeff = coeff - b * g[j].coeff;
      if (!coeff_is_zero(coeff)) out.push_back({ppp, std::move(coeff)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
BasicPolynomial<K> to_poly(const Ring& ring, TermVec<K> v) {
  return BasicPolynomial<K>::from_terms(ring, std::move(v));
}

template <class K>
void make_monic_terms(TermVec<K>& v) {
  if (v.empty()) return;
  const K inv = inverse(v.front().coeff);
  if (v.front().coeff == unit_like(v.front().coeff)) return;
  for (auto& t : v) t.coeff = t.coeff * inv;
}

/// Sum of sigma-ascending term lists kept in buckets of geometrically
/// growing size, so that adding a short list does not touch long ones.
template <class K>
class Geobucket {
 public:
  explicit Geobucket(const TermOrder& order) : order_(order) {}

  /// Adds a sigma-ascending list.
  void add(TermVec<K> v) {
    std::size_t i = 0;
    while (v.size() > capacity(i)) ++i;
    while (true) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      v = merge(std::move(buckets_[i]), std::move(v));
      buckets_[i].clear();
      if (v.size() <= capacity(i)) {
        buckets_[i] = std::move(v);
        return;
      }
      ++i;
    }
  }

  /// Removes and returns the sigma-largest term with nonzero coefficient.
  std::optional<Term<K>> pop_leading() {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (!best || order_.compare(buckets_[i].back().pp, buckets_[*best].back().pp) > 0) best = i;
      }
      if (!best) return std::nullopt;
      Term<K> lead = std::move(buckets_[*best].back());
      buckets_[*best].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty() || buckets_[i].back().pp != lead.pp) continue;
        lead.coeff = lead.coeff + buckets_[i].back().coeff;
        buckets_[i].pop_back();
      }
      if (!coeff_is_zero(lead.coeff)) return lead;
    }
  }

  /// Everything left, sigma-descending.
  TermVec<K> drain() {
    TermVec<K> out;
    for (auto& b : buckets_) out = merge(std::move(out), std::move(b));
    buckets_.clear();
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  static std::size_t capacity(std::size_t i) { return std::size_t{8} << (2 * i); }

  TermVec<K> merge(TermVec<K> a, TermVec<K> b) const {
    if (a.empty()) return b;
    if (b.empty()) return a;
    TermVec<K> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const auto c = order_.compare(a[i].pp, b[j].pp);
      if (c < 0) {
        out.push_back(std::move(a[i++]));
      } else if (c > 0) {
        out.push_back(std::move(b[j++]));
      } else {
        K sum = a[i].coeff + b[j].coeff;
        if (!coeff_is_zero(sum)) out.push_back({std::move(a[i].pp), std::move(sum)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
  }

  const TermOrder& order_;
  std::vector<TermVec<K>> buckets_;
};

/// -c*q*g[1..], sigma-ascending.
template <class K>
TermVec<K> scaled_tail(const K& c, const PowerProduct& q, const TermVec<K>& g) {
  TermVec<K> out;
  out.reserve(g.size() - 1);
  const bool q_one = q.is_one();
  for (std::size_t k = g.size(); k-- > 1;) out.push_back({q_one ? g[k].pp : g[k].pp * q, K(-(c * g[k].coeff))});
  return out;
}

/// A reducer: sigma-sorted terms of a nonzero polynomial.
template <class K>
struct Reducer {
  const TermVec<K>* terms;
};

/// Full reduction of `p` (sigma-sorted) by the reducers. With `fraction_free`
/// the reducers are not monic and the result is an unspecified nonzero scalar
/// multiple of the remainder.
template <class K>
TermVec<K> reduce_terms(const TermOrder& order, TermVec<K> p, const std::vector<const TermVec<K>*>& reducers,
                        bool fraction_free, Clock& clock, bool top_only = false) {
  if (!fraction_free) {
    Geobucket<K> acc(order);
    std::reverse(p.begin(), p.end());
    acc.add(std::move(p));
    TermVec<K> rest;
    while (auto t = acc.pop_leading()) {
      clock.tick();
      const TermVec<K>* red = nullptr;
      for (const auto* g : reducers)
        if (g->front().pp.divides(t->pp)) {
          red = g;
          break;
        }
      if (!red) {
        rest.push_back(std::move(*t));
        if (top_only) break;
        continue;
      }
      const K& lc = red->front().coeff;
      const K c = (lc == unit_like(lc)) ? t->coeff : K(t->coeff * inverse(lc));
      if (red->size() > 1) acc.add(scaled_tail(c, t->pp.divided_by(red->front().pp), *red));
    }
    TermVec<K> left = acc.drain();
    rest.insert(rest.end(), std::make_move_iterator(left.begin()), std::make_move_iterator(left.end()));
    return rest;
  }
  TermVec<K> rest;
  std::size_t pos = 0;
  [[maybe_unused]] std::size_t ff_steps = 0;
  while (pos < p.size()) {
    clock.tick();
    const Term<K>& t = p[pos];
    const TermVec<K>* red = nullptr;
    for (const auto* g : reducers)
      if (g->front().pp.divides(t.pp)) {
        red = g;
        break;
      }
    if (!red) {
      if (top_only) {
        rest.insert(rest.end(), std::make_move_iterator(p.begin() + pos), std::make_move_iterator(p.end()));
        return rest;
      }
      rest.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    const PowerProduct q = t.pp.divided_by(red->front().pp);
    const PowerProduct one(t.pp.arity());
    const K& lc = red->front().coeff;
    if (fraction_free) {
      if constexpr (FractionFree<K>::value) {
        // lc*p - c*q*g, with p and the finished remainder both scaled by lc.
        const K c = t.coeff;
        const bool lc_one = (lc == 1);
        p = combine(order, lc_one ? nullptr : &lc, one, p, pos + 1, c, q, *red, 1);
        if (!lc_one)
          for (auto& r : rest) r.coeff *= lc;
        if ((++ff_steps & 7) == 0) divide_common_content(rest, p);
        pos = 0;
        continue;
      }
    }
    const K c = (lc == unit_like(lc)) ? t.coeff : K(t.coeff * inverse(lc));
    p = combine(order, static_cast<const K*>(nullptr), one, p, pos + 1, c, q, *red, 1);
    pos = 0;
  }
  return rest;
}

template <class K>
BasicPolynomial<K> normal_form_impl(const TermOrder& order, const BasicPolynomial<K>& f,
                                    std::span<const BasicPolynomial<K>> divisors, const GroebnerOptions& options) {
  if (f.ring().size() != order.arity()) throw std::invalid_argument("ordering arity does not match ring");
  std::vector<TermVec<K>> sorted;
  sorted.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_same_ring(f.ring(), g.ring());
    if (!g.is_zero()) sorted.push_back(sorted_terms(order, g));
  }
  std::vector<const TermVec<K>*> reducers;
  for (const auto& s : sorted) reducers.push_back(&s);
  Clock clock(options);
  return to_poly(f.ring(), reduce_terms(order, sorted_terms(order, f), reducers, false, clock));
}

template <class K>
struct Element {
  TermVec<K> terms;  // sigma-decreasing
  unsigned sugar = 0;
  bool active = true;
  const PowerProduct& lt() const { return terms.front().pp; }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  PowerProduct lcm;
  unsigned sugar;
};

template <class K>
class Engine {
 public:
  Engine(const TermOrder& order, const Ring& ring, const GroebnerOptions& options)
      : order_(order), ring_(ring), clock_(options) {
    selection_ = options.selection;
    if (selection_ == Selection::Auto)
      selection_ = order.kind() == OrderKind::Lex ? Selection::Sugar : Selection::Normal;
    if constexpr (FractionFree<K>::value) fraction_free_ = options.integer_content;
  }

  /// Returns false if the unit ideal was detected.
  bool run(std::span<const BasicPolynomial<K>> generators) {
    for (const auto& f : generators) {
      require_same_ring(ring_, f.ring());
      if (f.is_zero()) continue;
      TermVec<K> h = reduce(sorted_terms(order_, f));
      if (h.empty()) continue;
      if (h.front().pp.is_one()) return false;
      insert(std::move(h), f.total_degree());
    }
    while (!pairs_.empty()) {
      clock_.tick();
      const std::size_t k = select();
      const Pair pr = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      TermVec<K> s = spoly(pr);
      if (s.empty()) continue;
      TermVec<K> h = reduce(std::move(s));
      if (h.empty()) continue;
      if (h.front().pp.is_one()) return false;
      insert(std::move(h), pr.sugar);
    }
    return true;
  }

  std::vector<BasicPolynomial<K>> active_elements() const {
    std::vector<BasicPolynomial<K>> out;
    for (const auto& e : elems_) {
      if (!e.active) continue;
      TermVec<K> v = e.terms;
      make_monic_terms(v);
      out.push_back(to_poly(ring_, std::move(v)));
    }
    return out;
  }

 private:
  TermVec<K> reduce(TermVec<K> p) {
    if constexpr (FractionFree<K>::value)
      if (fraction_free_) remove_content(p);
    std::vector<const TermVec<K>*> reducers;
    for (const auto& e : elems_)
      if (e.active) reducers.push_back(&e.terms);
    // Top reduction suffices here; reduce_basis interreduces afterwards.
    TermVec<K> h = reduce_terms(order_, std::move(p), reducers, fraction_free_, clock_, true);
    normalize(h);
    return h;
  }

  void normalize(TermVec<K>& h) {
    if constexpr (FractionFree<K>::value) {
      if (fraction_free_) {
        remove_content(h);
        return;
      }
    }
    make_monic_terms(h);
  }

  TermVec<K> spoly(const Pair& pr) {
    const auto& gi = elems_[pr.i].terms;
    const auto& gj = elems_[pr.j].terms;
    const PowerProduct ti = pr.lcm.divided_by(gi.front().pp);
    const PowerProduct tj = pr.lcm.divided_by(gj.front().pp);
    if (fraction_free_) {
      if constexpr (FractionFree<K>::value) {
        const K& ci = gi.front().coeff;
        const K& cj = gj.front().coeff;
        return combine(order_, &cj, ti, gi, 1, ci, tj, gj, 1);
      }
    }
    // Elements are monic unless fraction-free.
    return combine(order_, static_cast<const K*>(nullptr), ti, gi, 1, gj.front().coeff, tj, gj, 1);
  }

  unsigned key(const Pair& p) const { return selection_ == Selection::Sugar ? p.sugar : p.lcm.degree(); }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      const unsigned ka = key(a);
      const unsigned kb = key(b);
      if (ka != kb) {
        if (ka < kb) best = k;
        continue;
      }
      const auto c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
    }
    return best;
  }

  Pair make_pair(std::size_t i, std::size_t h) const {
    const auto& ei = elems_[i];
    const auto& eh = elems_[h];
    PowerProduct l = lcm(ei.lt(), eh.lt());
    const unsigned si = ei.sugar + (l.degree() - ei.lt().degree());
    const unsigned sh = eh.sugar + (l.degree() - eh.lt().degree());
    return {i, h, std::move(l), std::max(si, sh)};
  }

  /// Gebauer-Moeller update with the new element h.
  void insert(TermVec<K> terms, unsigned sugar) {
    const std::size_t h = elems_.size();
    elems_.push_back({std::move(terms), std::max(sugar, 0u), true});
    const PowerProduct lth = elems_[h].lt();

    std::vector<Pair> c;
    for (std::size_t i = 0; i < h; ++i)
      if (elems_[i].active) c.push_back(make_pair(i, h));

    // Chain criterion among the new pairs.
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      const bool cop = coprime(elems_[p.i].lt(), lth);
      bool keep = cop;
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (c[m].lcm.divides(p.lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (d[m].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    // Coprime criterion.
    std::vector<Pair> e;
    for (auto& p : d)
      if (!coprime(elems_[p.i].lt(), lth)) e.push_back(std::move(p));

    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (auto& p : pairs_) {
      if (lth.divides(p.lcm)) {
        const PowerProduct li = lcm(elems_[p.i].lt(), lth);
        const PowerProduct lj = lcm(elems_[p.j].lt(), lth);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    for (std::size_t i = 0; i < h; ++i)
      if (elems_[i].active && lth.divides(elems_[i].lt())) elems_[i].active = false;
  }

  const TermOrder& order_;
  Ring ring_;
  Clock clock_;
  Selection selection_ = Selection::Normal;
  bool fraction_free_ = false;
  std::vector<Element<K>> elems_;
  std::vector<Pair> pairs_;
};

template <class K>
BasicGroebnerBasis<K> unit_basis(const TermOrder& order, const Ring& ring, const K& one) {
  BasicGroebnerBasis<K> gb{order, ring, {}, true, true};
  gb.elements.push_back(BasicPolynomial<K>(ring, one));
  return gb;
}

template <class K>
K one_like(std::span<const BasicPolynomial<K>> gens) {
  for (const auto& g : gens)
    if (!g.is_zero()) return unit_like(g.terms().front().coeff);
  if constexpr (std::is_constructible_v<K, int>)
    return K(1);
  else
    throw std::logic_error("unit basis of the zero ideal");
}

template <class K>
BasicGroebnerBasis<K> buchberger_impl(const TermOrder& order, const Ring& ring,
                                      std::span<const BasicPolynomial<K>> generators, const GroebnerOptions& options) {
  if (ring.size() != order.arity()) throw std::invalid_argument("ordering arity does not match ring");
  Engine<K> engine(order, ring, options);
  if (!engine.run(generators)) return unit_basis(order, ring, one_like(generators));
  BasicGroebnerBasis<K> gb{order, ring, engine.active_elements(), true, false};
  if (gb.elements.empty()) gb.is_reduced = true;
  return gb;
}

template <class K>
BasicGroebnerBasis<K> reduce_basis_impl(const BasicGroebnerBasis<K>& basis, const GroebnerOptions& options) {
  const TermOrder& order = basis.order;
  std::vector<TermVec<K>> elems;
  for (const auto& g : basis.elements)
    if (!g.is_zero()) elems.push_back(sorted_terms(order, g));
  // Minimalize: drop elements whose leading term is divisible by another's;
  // among equal leading terms keep the first.
  std::vector<bool> keep(elems.size(), true);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const auto& li = elems[i].front().pp;
      const auto& lj = elems[j].front().pp;
      if (lj.divides(li) && (lj != li || j < i)) keep[i] = false;
    }
  std::vector<TermVec<K>> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(elems[i]));
  for (auto& m : minimal) make_monic_terms(m);

  Clock clock(options);
  std::vector<TermVec<K>> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const TermVec<K>*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    TermVec<K> tail(minimal[i].begin() + 1, minimal[i].end());
    TermVec<K> r = reduce_terms(order, std::move(tail), others, false, clock);
    r.insert(r.begin(), minimal[i].front());
    reduced[i] = std::move(r);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermVec<K>& a, const TermVec<K>& b) {
    return order.compare(a.front().pp, b.front().pp) < 0;
  });
  BasicGroebnerBasis<K> out{order, basis.ring, {}, true, true};
  for (auto& r : reduced) out.elements.push_back(to_poly(basis.ring, std::move(r)));
  return out;
}

template <class K>
BasicPolynomial<K> s_polynomial_impl(const TermOrder& order, const BasicPolynomial<K>& f, const BasicPolynomial<K>& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return BasicPolynomial<K>(f.ring());
  const TermVec<K> fs = sorted_terms(order, f);
  const TermVec<K> gs = sorted_terms(order, g);
  const PowerProduct l = lcm(fs.front().pp, gs.front().pp);
  const K a = inverse(fs.front().coeff);
  const K b = inverse(gs.front().coeff);
  // (l/ltf)/lcf * f - (l/ltg)/lcg * g
  return to_poly(f.ring(), combine(order, &a, l.divided_by(fs.front().pp), fs, 0, b, l.divided_by(gs.front().pp), gs, 0));
}

}  // namespace slicegb::detail

namespace slicegb {

template <class K>
BasicPolynomial<K> normal_form(const TermOrder& order, const BasicPolynomial<K>& f,
                               std::span<const BasicPolynomial<K>> divisors, const GroebnerOptions& options) {
  return detail::normal_form_impl(order, f, divisors, options);
}

template <class K>
BasicGroebnerBasis<K> buchberger(const TermOrder& order, const Ring& ring,
                                 std::span<const BasicPolynomial<K>> generators, const GroebnerOptions& options) {
  return detail::buchberger_impl(order, ring, generators, options);
}

template <class K>
BasicGroebnerBasis<K> reduce_basis(const BasicGroebnerBasis<K>& basis, const GroebnerOptions& options) {
  return detail::reduce_basis_impl(basis, options);
}

template <class K>
BasicPolynomial<K> s_polynomial(const TermOrder& order, const BasicPolynomial<K>& f, const BasicPolynomial<K>& g) {
  return detail::s_polynomial_impl(order, f, g);
}

}  // namespace slicegb

#define SLICEGB_INSTANTIATE_GROEBNER(K)                                                                        \
  template slicegb::BasicPolynomial<K> slicegb::normal_form<K>(                                                \
      const TermOrder&, const BasicPolynomial<K>&, std::span<const BasicPolynomial<K>>, const GroebnerOptions&); \
  template slicegb::BasicGroebnerBasis<K> slicegb::buchberger<K>(                                              \
      const TermOrder&, const Ring&, std::span<const BasicPolynomial<K>>, const GroebnerOptions&);             \
  template slicegb::BasicGroebnerBasis<K> slicegb::reduce_basis<K>(const BasicGroebnerBasis<K>&,               \
                                                                   const GroebnerOptions&);                    \
  template slicegb::BasicPolynomial<K> slicegb::s_polynomial<K>(const TermOrder&, const BasicPolynomial<K>&,   \
                                                                const BasicPolynomial<K>&);
