#pragma once

#include <cstdint>
#include <optional>

#include "slicegb/polynomial.hpp"
#include "slicegb/rational.hpp"

namespace slicegb {

/// Element of Z/pZ for a prime p < 2^31. Each value carries its modulus so
/// polynomials over different primes can coexist across threads.
class Modular {
 public:
  Modular() = default;
  Modular(std::uint64_t value, std::uint32_t prime) : v_(static_cast<std::uint32_t>(value % prime)), p_(prime) {}

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t prime() const noexcept { return p_; }

  friend Modular operator+(Modular a, Modular b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Modular operator-(Modular a, Modular b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_); }
  friend Modular operator*(Modular a, Modular b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Modular operator/(Modular a, Modular b) { return a * b.inverse(); }
  Modular operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Modular& operator*=(Modular b) { return *this = *this * b; }
  friend bool operator==(Modular a, Modular b) { return a.v_ == b.v_; }

  Modular inverse() const;

 private:
  static Modular raw(std::uint32_t v, std::uint32_t p) {
    Modular m;
    m.v_ = v;
    m.p_ = p;
    return m;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

inline bool coeff_is_zero(Modular a) { return a.value() == 0; }
inline Modular inverse(Modular a) { return a.inverse(); }
inline Modular unit_like(Modular a) { return Modular(1, a.prime()); }
inline bool is_constant_coeff(Modular) { return true; }

using ModularPolynomial = BasicPolynomial<Modular>;

/// q mod p, or nullopt when p divides the denominator.
std::optional<Modular> reduce_mod(const Rational& q, std::uint32_t prime);
/// Image of f over Z/pZ, or nullopt when p divides a denominator.
std::optional<ModularPolynomial> reduce_mod(const Polynomial& f, std::uint32_t prime);

/// Rational r = a/b with |a|, |b| <= sqrt(m/2) and r = u mod m, if any.
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m);

/// Primes below 2^31, descending from the largest.
std::uint32_t nth_large_prime(std::size_t k);

}  // namespace slicegb
