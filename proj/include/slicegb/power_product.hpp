#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace slicegb {

/// A power product x_1^a_1 ... x_n^a_n with the exponents stored inline.
/// Unused slots beyond the arity are always zero.
class PowerProduct {
 public:
  using Exponent = std::uint16_t;
  static constexpr std::size_t kMaxArity = 32;

  PowerProduct() = default;
  explicit PowerProduct(std::size_t arity);
  PowerProduct(std::initializer_list<unsigned> exponents);
  explicit PowerProduct(std::span<const unsigned> exponents);

  std::size_t arity() const noexcept { return arity_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit i is set iff x_i occurs.
  std::uint32_t support() const noexcept { return mask_; }

  bool divides(const PowerProduct& t) const noexcept {
    if ((mask_ & ~t.mask_) != 0 || degree_ > t.degree_) return false;
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] > t.exps_[i]) return false;
    return true;
  }

  /// this / d; requires d.divides(*this).
  PowerProduct divided_by(const PowerProduct& d) const;

  friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b);
  friend PowerProduct lcm(const PowerProduct& a, const PowerProduct& b);
  friend PowerProduct gcd(const PowerProduct& a, const PowerProduct& b);
  friend bool coprime(const PowerProduct& a, const PowerProduct& b) noexcept {
    return (a.mask_ & b.mask_) == 0;
  }

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) noexcept {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }
  /// Canonical storage order: lexicographic on the exponent vector.
  /// Unrelated to any term ordering.
  friend std::strong_ordering operator<=>(const PowerProduct& a, const PowerProduct& b) noexcept {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  void recompute() noexcept;

  std::array<Exponent, kMaxArity> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t arity_ = 0;
};

}  // namespace slicegb
