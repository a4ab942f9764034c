#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "slicegb/power_product.hpp"

namespace slicegb {

class Ring;

enum class OrderKind { Lex, DegLex, DegRevLex, XiDegRev, Elim };

/// A term ordering on the power products of a ring with `arity` variables.
///
/// Every kind ranks variables by index (x_1 > x_2 > ... > x_n), with one
/// exception forced by the x_i-DegRev definition: for XiDegRev(pivot) the
/// pivot is the smallest variable and the others keep index order.
///
///  - Lex:        lexicographic.
///  - DegLex:     total degree, then lexicographic.
///  - DegRevLex:  total degree, then reverse lexicographic.
///  - XiDegRev:   total degree, then smaller pivot exponent is larger,
///                then reverse lexicographic on the remaining variables.
///                DegRevLex is XiDegRev(pivot = n-1).
///  - Elim(k):    block order; DegRevLex on x_1..x_k first, then DegRevLex on
///                x_{k+1}..x_n. Eliminates the first k variables.
class TermOrder {
 public:
  TermOrder() = default;
  static TermOrder lex(std::size_t arity);
  static TermOrder deglex(std::size_t arity);
  static TermOrder degrevlex(std::size_t arity);
  static TermOrder xi_degrev(std::size_t arity, std::size_t pivot);
  static TermOrder elimination(std::size_t arity, std::size_t block);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return arity_; }
  /// XiDegRev pivot or Elim block size.
  std::size_t parameter() const noexcept { return param_; }
  bool degree_compatible() const noexcept;

  /// Three-way comparison; throws std::invalid_argument on arity mismatch.
  std::strong_ordering compare(const PowerProduct& a, const PowerProduct& b) const;
  bool greater(const PowerProduct& a, const PowerProduct& b) const { return compare(a, b) > 0; }

  /// The induced ordering on the ring without variable `var` (sigma-hat).
  TermOrder restricted_without(std::size_t var) const;
  /// The same kind of ordering on a ring with `front` extra leading variables.
  /// Elim blocks grow by `front`.
  TermOrder widened(std::size_t front) const;

  /// Name as accepted by parse_order: lex, deglex, degrevlex,
  /// degrev:<var>, elim:<k>.
  std::string name(const Ring& ring) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(OrderKind kind, std::size_t arity, std::size_t param)
      : kind_(kind), arity_(arity), param_(param) {}

  std::strong_ordering compare_unchecked(const PowerProduct& a, const PowerProduct& b) const noexcept;

  OrderKind kind_ = OrderKind::DegRevLex;
  std::size_t arity_ = 0;
  std::size_t param_ = 0;
};

/// Parses an ordering name against a ring (see TermOrder::name).
TermOrder parse_order(const std::string& name, const Ring& ring);

}  // namespace slicegb
