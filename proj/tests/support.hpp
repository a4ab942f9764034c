#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "slicegb/parser.hpp"
#include "slicegb/polynomial.hpp"

namespace testing {

using namespace slicegb;

inline Ring ring(std::string_view header) { return parse_ring(header); }
inline Polynomial poly(const Ring& r, std::string_view text) { return parse_polynomial(r, text); }
inline std::vector<Polynomial> polys(const Ring& r, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

/// Deterministic generator for property tests. SLICEGB_SEED shifts the seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed + env_offset()) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1)); }

  Rational rational(int num_range = 9, int den_max = 4) {
    Rational q(integer(-num_range, num_range), integer(1, den_max));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(int num_range = 9, int den_max = 4) {
    for (;;) {
      Rational q = rational(num_range, den_max);
      if (sgn(q) != 0) return q;
    }
  }

  PowerProduct power_product(std::size_t arity, unsigned max_degree) {
    PowerProduct pp(arity);
    const unsigned d = static_cast<unsigned>(integer(0, static_cast<int>(max_degree)));
    for (unsigned k = 0; k < d; ++k) {
      const std::size_t v = index(arity);
      pp.set(v, pp[v] + 1);
    }
    return pp;
  }

  /// Exponent bound per variable instead of a total degree bound.
  PowerProduct power_product_boxed(std::span<const unsigned> max_exps) {
    PowerProduct pp(max_exps.size());
    for (std::size_t i = 0; i < max_exps.size(); ++i)
      pp.set(i, static_cast<unsigned>(integer(0, static_cast<int>(max_exps[i]))));
    return pp;
  }

  Polynomial polynomial(const Ring& r, std::size_t max_terms, unsigned max_degree, int num_range = 9,
                        int den_max = 4) {
    std::vector<Term<Rational>> terms;
    const std::size_t count = static_cast<std::size_t>(integer(1, static_cast<int>(max_terms)));
    for (std::size_t k = 0; k < count; ++k)
      terms.push_back({power_product(r.size(), max_degree), nonzero_rational(num_range, den_max)});
    return Polynomial::from_terms(r, std::move(terms));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  static std::uint64_t env_offset() {
    if (const char* s = std::getenv("SLICEGB_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
  }
  std::mt19937_64 rng_;
};

/// All power products in `arity` variables of degree <= max_degree.
inline std::vector<PowerProduct> all_power_products(std::size_t arity, unsigned max_degree) {
  std::vector<PowerProduct> out;
  std::vector<unsigned> e(arity, 0);
  for (;;) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (d <= max_degree) out.emplace_back(std::span<const unsigned>(e));
    std::size_t i = 0;
    while (i < arity && ++e[i] > max_degree) e[i++] = 0;
    if (i == arity) break;
  }
  return out;
}

}  // namespace testing
