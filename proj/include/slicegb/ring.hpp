#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slicegb {

/// Ordered list of distinct variable names. Position fixes the variable
/// index used by term orders, pivots and exponent vectors (0-based).
/// Cheap to copy; rings compare equal when their names agree.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_ ? names_->size() : 0; }
  bool valid() const noexcept { return static_cast<bool>(names_); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// index_of or throw std::invalid_argument("unknown variable ...").
  std::size_t require(std::string_view name) const;

  /// The ring with variable i removed (the target of a hyperplane section).
  Ring without(std::size_t i) const;
  /// New ring whose variables are `front` followed by this ring's.
  Ring with_prefix(const std::vector<std::string>& front) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws std::invalid_argument unless a == b.
void require_same_ring(const Ring& a, const Ring& b);

/// A name not yet used by `ring`, derived from `stem`.
std::string fresh_name(const Ring& ring, std::string_view stem);

}  // namespace slicegb
