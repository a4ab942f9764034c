#include "slicegb/term_order.hpp"

#include <stdexcept>
#include <string>

#include "slicegb/ring.hpp"

namespace slicegb {

namespace {

// Reverse lexicographic tie-break on [lo, hi), skipping `skip`: the term with
// the smaller exponent in the last differing variable is larger.
inline std::strong_ordering revlex(const PowerProduct& a, const PowerProduct& b, std::size_t lo,
                                   std::size_t hi, std::size_t skip) noexcept {
  for (std::size_t i = hi; i-- > lo;) {
    if (i == skip) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering lexcmp(const PowerProduct& a, const PowerProduct& b, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

inline unsigned block_degree(const PowerProduct& a, std::size_t lo, std::size_t hi) noexcept {
  unsigned d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += a[i];
  return d;
}

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

}  // namespace

TermOrder TermOrder::lex(std::size_t arity) { return {OrderKind::Lex, arity, 0}; }
TermOrder TermOrder::deglex(std::size_t arity) { return {OrderKind::DegLex, arity, 0}; }
TermOrder TermOrder::degrevlex(std::size_t arity) { return {OrderKind::DegRevLex, arity, 0}; }

TermOrder TermOrder::xi_degrev(std::size_t arity, std::size_t pivot) {
  if (pivot >= arity) throw std::invalid_argument("pivot out of range");
  return {OrderKind::XiDegRev, arity, pivot};
}

TermOrder TermOrder::elimination(std::size_t arity, std::size_t block) {
  if (block == 0 || block >= arity) throw std::invalid_argument("elimination block must be a proper prefix");
  return {OrderKind::Elim, arity, block};
}

bool TermOrder::degree_compatible() const noexcept {
  return kind_ == OrderKind::DegLex || kind_ == OrderKind::DegRevLex || kind_ == OrderKind::XiDegRev;
}

std::strong_ordering TermOrder::compare(const PowerProduct& a, const PowerProduct& b) const {
  if (a.arity() != arity_ || b.arity() != arity_)
    throw std::invalid_argument("power product arity does not match the term order");
  return compare_unchecked(a, b);
}

std::strong_ordering TermOrder::compare_unchecked(const PowerProduct& a,
                                                  const PowerProduct& b) const noexcept {
  switch (kind_) {
    case OrderKind::Lex:
      return lexcmp(a, b, arity_);
    case OrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return lexcmp(a, b, arity_);
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, 0, arity_, kNoSkip);
    case OrderKind::XiDegRev:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      if (a[param_] != b[param_]) return b[param_] <=> a[param_];
      return revlex(a, b, 0, arity_, param_);
    case OrderKind::Elim: {
      const unsigned da = block_degree(a, 0, param_);
      const unsigned db = block_degree(b, 0, param_);
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, param_, kNoSkip); c != 0) return c;
      const unsigned ra = a.degree() - da;
      const unsigned rb = b.degree() - db;
      if (ra != rb) return ra <=> rb;
      return revlex(a, b, param_, arity_, kNoSkip);
    }
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::restricted_without(std::size_t var) const {
  if (var >= arity_) throw std::invalid_argument("variable index out of range");
  const std::size_t n = arity_ - 1;
  switch (kind_) {
    case OrderKind::Lex:
    case OrderKind::DegLex:
    case OrderKind::DegRevLex:
      return {kind_, n, 0};
    case OrderKind::XiDegRev:
      if (var == param_) return degrevlex(n);
      return xi_degrev(n, var < param_ ? param_ - 1 : param_);
    case OrderKind::Elim: {
      const std::size_t block = var < param_ ? param_ - 1 : param_;
      if (block == 0 || block >= n) return degrevlex(n);
      return elimination(n, block);
    }
  }
  return degrevlex(n);
}

TermOrder TermOrder::widened(std::size_t front) const {
  const std::size_t n = arity_ + front;
  switch (kind_) {
    case OrderKind::XiDegRev:
      return xi_degrev(n, param_ + front);
    case OrderKind::Elim:
      return elimination(n, param_ + front);
    default:
      return {kind_, n, 0};
  }
}

std::string TermOrder::name(const Ring& ring) const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegLex:
      return "deglex";
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::XiDegRev:
      return "degrev:" + (param_ < ring.size() ? ring.name(param_) : std::to_string(param_));
    case OrderKind::Elim:
      return "elim:" + std::to_string(param_);
  }
  return "?";
}

TermOrder parse_order(const std::string& name, const Ring& ring) {
  const std::size_t n = ring.size();
  if (name == "lex") return TermOrder::lex(n);
  if (name == "deglex") return TermOrder::deglex(n);
  if (name == "degrevlex" || name == "drl") return TermOrder::degrevlex(n);
  if (name.rfind("degrev:", 0) == 0) return TermOrder::xi_degrev(n, ring.require(name.substr(7)));
  if (name.rfind("elim:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = static_cast<std::size_t>(std::stoul(name.substr(5)));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed elimination order '" + name + "'");
    }
    return TermOrder::elimination(n, k);
  }
  throw std::invalid_argument("unknown term order '" + name + "'");
}

}  // namespace slicegb
