#include "slicegb/power_product.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace slicegb {

namespace {

void check_arity(std::size_t arity) {
  if (arity > PowerProduct::kMaxArity)
    throw std::invalid_argument("at most " + std::to_string(PowerProduct::kMaxArity) + " variables supported");
}

PowerProduct::Exponent checked(unsigned long e) {
  if (e > std::numeric_limits<PowerProduct::Exponent>::max()) throw std::overflow_error("exponent overflow");
  return static_cast<PowerProduct::Exponent>(e);
}

}  // namespace

PowerProduct::PowerProduct(std::size_t arity) {
  check_arity(arity);
  arity_ = static_cast<std::uint8_t>(arity);
}

PowerProduct::PowerProduct(std::initializer_list<unsigned> exponents)
    : PowerProduct(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

PowerProduct::PowerProduct(std::span<const unsigned> exponents) {
  check_arity(exponents.size());
  arity_ = static_cast<std::uint8_t>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = checked(exponents[i]);
  recompute();
}

void PowerProduct::set(std::size_t i, unsigned e) {
  if (i >= arity_) throw std::out_of_range("power product index out of range");
  exps_[i] = checked(e);
  recompute();
}

void PowerProduct::recompute() noexcept {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= (1u << i);
  }
}

PowerProduct PowerProduct::divided_by(const PowerProduct& d) const {
  if (!d.divides(*this)) throw std::invalid_argument("power product is not divisible");
  PowerProduct r = *this;
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - d.exps_[i]);
  r.recompute();
  return r;
}

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("power product arity mismatch");
  PowerProduct r = a;
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = checked(static_cast<unsigned long>(a.exps_[i]) + b.exps_[i]);
  r.degree_ = a.degree_ + b.degree_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

PowerProduct lcm(const PowerProduct& a, const PowerProduct& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("power product arity mismatch");
  PowerProduct r = a;
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.recompute();
  return r;
}

PowerProduct gcd(const PowerProduct& a, const PowerProduct& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("power product arity mismatch");
  PowerProduct r = a;
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.recompute();
  return r;
}

}  // namespace slicegb
