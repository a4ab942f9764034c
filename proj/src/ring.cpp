#include "slicegb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "slicegb/power_product.hpp"

namespace slicegb {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Ring::Ring(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (names.size() > PowerProduct::kMaxArity)
    throw std::invalid_argument("too many variables (max " + std::to_string(PowerProduct::kMaxArity) + ")");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::vector<std::string>& Ring::names() const {
  static const std::vector<std::string> empty;
  return names_ ? *names_ : empty;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  if (!names_) return std::nullopt;
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

Ring Ring::without(std::size_t i) const {
  if (i >= size()) throw std::invalid_argument("variable index out of range");
  if (size() == 1) throw std::invalid_argument("cannot remove the only variable of a ring");
  std::vector<std::string> n = names();
  n.erase(n.begin() + static_cast<std::ptrdiff_t>(i));
  return Ring(std::move(n));
}

Ring Ring::with_prefix(const std::vector<std::string>& front) const {
  std::vector<std::string> n = front;
  n.insert(n.end(), names().begin(), names().end());
  return Ring(std::move(n));
}

bool operator==(const Ring& a, const Ring& b) noexcept {
  if (a.names_ == b.names_) return true;
  if (!a.names_ || !b.names_) return false;
  return *a.names_ == *b.names_;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw std::invalid_argument("ring mismatch");
}

std::string fresh_name(const Ring& ring, std::string_view stem) {
  std::string candidate(stem);
  for (int k = 0; ring.index_of(candidate); ++k) candidate = std::string(stem) + "_" + std::to_string(k);
  return candidate;
}

}  // namespace slicegb
