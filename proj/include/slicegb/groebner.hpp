#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "slicegb/errors.hpp"
#include "slicegb/polynomial.hpp"

namespace slicegb {

/// Generators of an ideal of P. Zero generators are dropped; an empty list is
/// the zero ideal.
class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<Polynomial> generators = {});

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

/// Pair selection for Buchberger's algorithm.
enum class Selection {
  Auto,    // Sugar for lex, Normal otherwise
  Normal,  // minimal lcm degree, ties by sigma on the lcm
  Sugar,   // minimal sugar degree, ties by sigma on the lcm
};

struct GroebnerOptions {
  Selection selection = Selection::Auto;
  /// Rational coefficients only: fraction-free reduction with integer content
  /// removal. Results are identical; only speed differs.
  bool integer_content = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// eliminate(): compute the block-order basis with modular_groebner_basis.
  /// The kept part then spans an ideal containing I intersected with the
  /// kept ring; the caller confirms the reverse inclusion.
  bool modular = false;
};

/// Monic basis elements tagged with their ordering.
template <class K>
struct BasicGroebnerBasis {
  TermOrder order;
  Ring ring;
  std::vector<BasicPolynomial<K>> elements;
  bool is_minimal = false;
  bool is_reduced = false;

  std::vector<PowerProduct> leading_terms() const {
    std::vector<PowerProduct> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(leading_term(order, g).pp);
    return out;
  }
  bool is_unit() const {
    return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
  }
};

using GroebnerBasis = BasicGroebnerBasis<Rational>;

/// Full reduction of f modulo `divisors`. Reducers are tried in list order,
/// sigma-largest reducible term first. Zero divisors are ignored.
template <class K>
BasicPolynomial<K> normal_form(const TermOrder& order, const BasicPolynomial<K>& f,
                               std::span<const BasicPolynomial<K>> divisors,
                               const GroebnerOptions& options = {});

/// A monic sigma-Groebner basis of the ideal generated by `generators`
/// (Gebauer-Moeller criteria). The zero ideal yields an empty basis and the
/// unit ideal {1}. Throws ResourceLimit past the deadline.
template <class K>
BasicGroebnerBasis<K> buchberger(const TermOrder& order, const Ring& ring,
                                 std::span<const BasicPolynomial<K>> generators,
                                 const GroebnerOptions& options = {});

/// The reduced basis: minimal, monic, interreduced, sorted by increasing
/// leading term. Input must be a Groebner basis.
template <class K>
BasicGroebnerBasis<K> reduce_basis(const BasicGroebnerBasis<K>& basis, const GroebnerOptions& options = {});

/// S-polynomial of two polynomials with respect to `order`.
template <class K>
BasicPolynomial<K> s_polynomial(const TermOrder& order, const BasicPolynomial<K>& f, const BasicPolynomial<K>& g);

/// Convenience: reduced Groebner basis of an ideal.
GroebnerBasis groebner_basis(const TermOrder& order, const Ideal& ideal, const GroebnerOptions& options = {});

/// Reduced basis from images modulo word-size primes, lifted by Chinese
/// remaindering and rational reconstruction. Verified over Q to be a
/// Groebner basis whose ideal contains `ideal`. Equality holds unless every
/// prime used was unlucky; it is not checked here. Throws ResourceLimit past
/// the deadline or when the primes run out.
GroebnerBasis modular_groebner_basis(const TermOrder& order, const Ideal& ideal, const GroebnerOptions& options = {});

/// f in I, tested against the reduced basis.
bool is_member(const Polynomial& f, const Ideal& ideal, const TermOrder& order);
bool is_member(const Polynomial& f, const GroebnerBasis& basis);

/// I intersected with Q[kept variables], via a block elimination order with
/// the dropped variables in front. The result lives in the ring of the kept
/// variables (in their original relative order). `drop` must be a proper
/// subset. Generators are the reduced basis elements free of dropped
/// variables.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop, const GroebnerOptions& options = {});

/// Krull dimension of P/I: -1 for the unit ideal, n for the zero ideal.
int dimension(const Ideal& ideal, const TermOrder& order);
/// Dimension from leading terms of any Groebner basis (the minimal number of
/// variables hitting every leading term's support, subtracted from n).
int dimension_of_leading_terms(std::size_t arity, std::span<const PowerProduct> leading_terms);

/// (I : f) = { g : g*f in I }, via I intersected with (f) and exact division.
Ideal colon_ideal(const Ideal& ideal, const Polynomial& f);
/// I intersected with J, via a tag variable.
Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : h^infinity), via I + (1 - t*h) and elimination of t.
Ideal saturate(const Ideal& ideal, const Polynomial& h);
/// True iff f divides zero modulo I.
bool is_zero_divisor(const Polynomial& f, const Ideal& ideal);

/// Every generator of `a` lies in `b`.
bool ideal_contained(const Ideal& a, const Ideal& b);

}  // namespace slicegb
