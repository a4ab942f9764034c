#include "slicegb/modular.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "slicegb/groebner.hpp"

#include "detail/groebner_engine.ipp"

SLICEGB_INSTANTIATE_GROEBNER(slicegb::Modular)

namespace slicegb {

Modular Modular::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero modulo p");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (x0 < 0) x0 += p_;
  return raw(static_cast<std::uint32_t>(x0), p_);
}

std::optional<Modular> reduce_mod(const Rational& q, std::uint32_t prime) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), prime);
  if (den == 0) return std::nullopt;
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), prime);
  return Modular(num, prime) / Modular(den, prime);
}

std::optional<ModularPolynomial> reduce_mod(const Polynomial& f, std::uint32_t prime) {
  std::vector<Term<Modular>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    const auto c = reduce_mod(t.coeff, prime);
    if (!c) return std::nullopt;
    terms.push_back({t.pp, *c});
  }
  return ModularPolynomial::from_terms(f.ring(), std::move(terms));
}

std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer r0 = m, r1 = u % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

std::uint32_t nth_large_prime(std::size_t k) {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    Integer c = (Integer(1) << 31) - 1;
    while (out.size() < 1024) {
      if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) out.push_back(static_cast<std::uint32_t>(c.get_ui()));
      c -= 2;
    }
    return out;
  }();
  if (k >= primes.size()) throw std::out_of_range("prime index out of range");
  return primes[k];
}

namespace {

using Shape = std::vector<std::vector<PowerProduct>>;

Shape shape_of(const BasicGroebnerBasis<Modular>& gb) {
  Shape out;
  for (const auto& g : gb.elements) {
    std::vector<PowerProduct> pps;
    for (const auto& t : g.terms()) pps.push_back(t.pp);
    out.push_back(std::move(pps));
  }
  return out;
}

// Residues of every coefficient modulo the product of the primes seen so far
// with a given shape.
struct Lift {
  Integer modulus = 1;
  std::vector<std::vector<Integer>> residues;
  std::size_t primes = 0;
  std::optional<std::vector<Polynomial>> previous;
};

void absorb(Lift& lift, const BasicGroebnerBasis<Modular>& gb, std::uint32_t prime) {
  if (lift.residues.empty()) {
    for (const auto& g : gb.elements) {
      std::vector<Integer> r;
      for (const auto& t : g.terms()) r.emplace_back(t.coeff.value());
      lift.residues.push_back(std::move(r));
    }
  } else {
    const Modular m_inv = Modular(mpz_fdiv_ui(lift.modulus.get_mpz_t(), prime), prime).inverse();
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      const auto& terms = gb.elements[i].terms();
      for (std::size_t j = 0; j < terms.size(); ++j) {
        Integer& r = lift.residues[i][j];
        const Modular r_mod(mpz_fdiv_ui(r.get_mpz_t(), prime), prime);
        const Modular t = (terms[j].coeff - r_mod) * m_inv;
        r += lift.modulus * t.value();
      }
    }
  }
  lift.modulus *= prime;
  ++lift.primes;
}

std::optional<std::vector<Polynomial>> reconstruct(const Lift& lift, const Shape& shape, const Ring& ring) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::vector<Term<Rational>> terms;
    for (std::size_t j = 0; j < shape[i].size(); ++j) {
      auto q = rational_reconstruction(lift.residues[i][j], lift.modulus);
      if (!q) return std::nullopt;
      terms.push_back({shape[i][j], std::move(*q)});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

bool verify(const TermOrder& order, const Ideal& ideal, const std::vector<Polynomial>& basis) {
  for (const auto& f : ideal.generators())
    if (!normal_form<Rational>(order, f, basis).is_zero()) return false;
  const std::size_t n = basis.size();
  std::vector<PowerProduct> lt;
  for (const auto& g : basis) lt.push_back(leading_term(order, g).pp);
  // S-pairs by increasing lcm degree. A pair is skipped when some LT_k divides
  // its lcm and both pairs with k are already settled (chain criterion).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return lcm(lt[a.first], lt[a.second]).degree() < lcm(lt[b.first], lt[b.second]).degree();
  });
  std::vector<std::vector<bool>> settled(n, std::vector<bool>(n, false));
  auto mark = [&](std::size_t i, std::size_t j) { settled[i][j] = settled[j][i] = true; };
  for (const auto& [i, j] : pairs)
    if (coprime(lt[i], lt[j])) mark(i, j);
  for (const auto& [i, j] : pairs) {
    if (settled[i][j]) continue;
    const PowerProduct l = lcm(lt[i], lt[j]);
    bool chained = false;
    for (std::size_t k = 0; k < n && !chained; ++k)
      chained = k != i && k != j && lt[k].divides(l) && settled[i][k] && settled[j][k];
    if (!chained && !normal_form<Rational>(order, s_polynomial(order, basis[i], basis[j]), basis).is_zero())
      return false;
    mark(i, j);
  }
  return true;
}

}  // namespace

GroebnerBasis modular_groebner_basis(const TermOrder& order, const Ideal& ideal, const GroebnerOptions& options) {
  const Ring& ring = ideal.ring();
  if (ring.size() != order.arity()) throw std::invalid_argument("ordering arity does not match ring");
  if (ideal.is_zero()) return GroebnerBasis{order, ring, {}, true, true};

  std::map<Shape, Lift> lifts;
  for (std::size_t k = 0;; ++k) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
      throw ResourceLimit("modular Groebner basis computation exceeded the time limit");
    if (k >= 1024) throw ResourceLimit("modular Groebner basis: no stable lift within the available primes");
    const std::uint32_t prime = nth_large_prime(k);
    std::vector<ModularPolynomial> images;
    bool bad = false;
    for (const auto& f : ideal.generators()) {
      auto fp = reduce_mod(f, prime);
      if (!fp || fp->size() != f.size()) {
        bad = true;
        break;
      }
      images.push_back(std::move(*fp));
    }
    if (bad) continue;
    const auto gb = reduce_basis(buchberger<Modular>(order, ring, images, options), options);
    const Shape shape = shape_of(gb);
    Lift& lift = lifts[shape];
    absorb(lift, gb, prime);
    auto candidate = reconstruct(lift, shape, ring);
    if (!candidate) continue;
    // Same lift from one more prime before the exact check.
    const bool stable = lift.previous && *lift.previous == *candidate;
    lift.previous = std::move(candidate);
    if (!stable) continue;
    if (!verify(order, ideal, *lift.previous)) {
      lift.previous.reset();
      continue;
    }
    return GroebnerBasis{order, ring, std::move(*lift.previous), true, true};
  }
}

}  // namespace slicegb
