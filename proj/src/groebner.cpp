#include "slicegb/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "detail/groebner_engine.ipp"

SLICEGB_INSTANTIATE_GROEBNER(slicegb::Rational)

namespace slicegb {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GroebnerBasis groebner_basis(const TermOrder& order, const Ideal& ideal, const GroebnerOptions& options) {
  return reduce_basis(buchberger<Rational>(order, ideal.ring(), ideal.generators(), options), options);
}

bool is_member(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring);
  return normal_form<Rational>(basis.order, f, basis.elements).is_zero();
}

bool is_member(const Polynomial& f, const Ideal& ideal, const TermOrder& order) {
  return is_member(f, groebner_basis(order, ideal));
}

bool ideal_contained(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) return true;
  const GroebnerBasis gb = groebner_basis(TermOrder::degrevlex(b.ring().size()), b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& f) { return is_member(f, gb); });
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop, const GroebnerOptions& options) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.size();
  std::vector<bool> dropped(n, false);
  for (std::size_t v : drop) {
    if (v >= n) throw std::invalid_argument("variable index out of range");
    if (dropped[v]) throw std::invalid_argument("duplicate variable in elimination set");
    dropped[v] = true;
  }
  const std::size_t k = drop.size();
  if (k == n) throw std::invalid_argument("cannot eliminate every variable");
  if (k == 0) return ideal;

  // Dropped variables first, both blocks keep their relative order.
  std::vector<std::string> names;
  std::vector<int> to_work(n);
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) {
      to_work[i] = static_cast<int>(names.size());
      names.push_back(ring.name(i));
    }
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) {
      to_work[i] = static_cast<int>(names.size());
      names.push_back(ring.name(i));
      kept_names.push_back(ring.name(i));
    }
  const Ring work(names);
  const Ring kept(kept_names);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, work, to_work));

  const TermOrder order = TermOrder::elimination(n, k);
  const GroebnerBasis gb = options.modular ? modular_groebner_basis(order, Ideal(work, gens), options)
                                           : reduce_basis(buchberger<Rational>(order, work, gens, options), options);

  std::vector<int> to_kept(n, -1);
  for (std::size_t i = k; i < n; ++i) to_kept[i] = static_cast<int>(i - k);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !g.involves(v);
    if (free) out.push_back(map_variables(g, kept, to_kept));
  }
  return Ideal(kept, std::move(out));
}

int dimension_of_leading_terms(std::size_t arity, std::span<const PowerProduct> leading_terms) {
  std::vector<std::uint32_t> supports;
  for (const auto& t : leading_terms) {
    if (t.is_one()) return -1;
    supports.push_back(t.support());
  }
  // Keep minimal supports only; a set hitting those hits every support.
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t s : supports) {
    bool redundant = false;
    for (std::uint32_t m : minimal)
      if ((m & s) == m) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(s);
  }
  std::size_t best = arity;
  std::function<void(std::uint32_t, std::size_t)> search = [&](std::uint32_t chosen, std::size_t count) {
    const std::uint32_t* open = nullptr;
    for (const auto& s : minimal)
      if ((s & chosen) == 0) {
        open = &s;
        break;
      }
    if (!open) {
      best = std::min(best, count);
      return;
    }
    if (count + 1 >= best) return;
    for (std::uint32_t bits = *open; bits != 0; bits &= bits - 1)
      search(chosen | (bits & -bits), count + 1);
  };
  search(0, 0);
  return static_cast<int>(arity - best);
}

int dimension(const Ideal& ideal, const TermOrder& order) {
  if (ideal.is_zero()) return static_cast<int>(ideal.ring().size());
  const GroebnerBasis gb = buchberger<Rational>(order, ideal.ring(), ideal.generators());
  const auto lts = gb.leading_terms();
  return dimension_of_leading_terms(ideal.ring().size(), lts);
}

namespace {

Ring tagged_ring(const Ring& ring) { return ring.with_prefix({fresh_name(ring, "t")}); }

Ideal eliminate_tag(const Ring& tagged, std::vector<Polynomial> gens) {
  const std::size_t tag = 0;
  return eliminate(Ideal(tagged, std::move(gens)), std::span<const std::size_t>(&tag, 1));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const Ring tagged = tagged_ring(a.ring());
  const Polynomial t = variable(tagged, 0);
  const Polynomial one_minus_t = constant(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * rename_into(f, tagged));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * rename_into(g, tagged));
  return eliminate_tag(tagged, std::move(gens));
}

Ideal colon_ideal(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (ideal.is_zero()) return Ideal(ideal.ring());
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> quotients;
  for (const auto& h : meet.generators()) {
    auto q = exact_quotient(h, f);
    if (!q) throw std::logic_error("intersection generator not divisible by f");
    quotients.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(quotients));
}

Ideal saturate(const Ideal& ideal, const Polynomial& h) {
  require_same_ring(ideal.ring(), h.ring());
  if (h.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  const Ring tagged = tagged_ring(ideal.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(rename_into(f, tagged));
  gens.push_back(constant(tagged, 1) - variable(tagged, 0) * rename_into(h, tagged));
  return eliminate_tag(tagged, std::move(gens));
}

bool is_zero_divisor(const Polynomial& f, const Ideal& ideal) {
  return !ideal_contained(colon_ideal(ideal, f), ideal);
}

}  // namespace slicegb
