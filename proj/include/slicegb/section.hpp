#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "slicegb/groebner.hpp"

namespace slicegb {

/// L = x_i - l with l = sum_{j>i} c_j x_j + gamma.
struct LinearForm {
  std::size_t pivot = 0;
  std::vector<Rational> tail;  // length n; zero at indices <= pivot
  Rational gamma = 0;

  static LinearForm axis(std::size_t arity, std::size_t pivot, Rational gamma);
  /// Throws std::invalid_argument unless tail has length `arity` and vanishes
  /// at indices <= pivot.
  void validate(std::size_t arity) const;
  bool axis_aligned() const;
  /// l as a polynomial of `ring`.
  Polynomial ell(const Ring& ring) const;
  /// x_i - l.
  Polynomial polynomial(const Ring& ring) const;
};

/// L = x_i - l with homogeneous l = sum_{j != i} c_j x_j.
struct HomLinearForm {
  std::size_t pivot = 0;
  std::vector<Rational> coeffs;  // length n; zero at the pivot

  void validate(std::size_t arity) const;
  Polynomial ell(const Ring& ring) const;
};

/// pi_L(f): substitute x_i := l and drop x_i from the ring.
Polynomial apply_pi(const LinearForm& l, const Polynomial& f);
Polynomial apply_pi(const HomLinearForm& l, const Polynomial& f);

/// Pivot-free image of a pivot-free power product in the ring without it,
/// and back.
PowerProduct drop_variable(const PowerProduct& t, std::size_t var);
PowerProduct insert_variable(const PowerProduct& t, std::size_t var);

/// theta(x_i) = x_i + l (same ring) and rho(x_i) = 0 (ring without x_i).
Polynomial theta(const HomLinearForm& l, const Polynomial& f);
Polynomial rho(std::size_t pivot, const Polynomial& f);

/// Reduced sigma-hat basis of pi_L(I) for homogeneous I, computed as
/// rho(G) \ {0} with G the reduced sigma basis of theta(I). `order` must be of
/// x_i-DegRev type for the pivot.
GroebnerBasis homogeneous_section_gb(const Ideal& ideal, const HomLinearForm& l, const TermOrder& order);

struct SectionReport {
  GroebnerBasis section;           // pi_L(G) in the ring without x_i
  std::vector<bool> lt_preserved;  // per element of G
  bool nonzerodivisor = false;     // L does not divide zero modulo I
};

/// Sections a monic sigma-Groebner basis. Throws HypothesisViolation listing
/// the elements whose leading term is not preserved.
SectionReport section_gb(const GroebnerBasis& basis, const LinearForm& l);

/// Certifies that G is a sigma-Groebner basis of I from its section.
/// Throws HypothesisViolation, NotSectionBasis, MembershipFailed or
/// ZeroDivisor when the corresponding hypothesis fails.
GroebnerBasis verify_lifting(const Ideal& ideal, const std::vector<Polynomial>& g, const LinearForm& l,
                             const TermOrder& order);

/// Parallel hyperplanes L_k = x_i - (sum_{j>i} c_j x_j + gamma_k).
struct SliceFamily {
  Ring ring;  // the full ring
  std::size_t pivot = 0;
  std::vector<Rational> tail;  // length n; zero at indices <= pivot
  std::vector<Rational> gammas;

  static SliceFamily axis(const Ring& ring, std::size_t pivot, std::vector<Rational> gammas);
  void validate() const;
  bool axis_aligned() const;
  LinearForm form(std::size_t k) const;
  Ring section_ring() const { return ring.without(pivot); }
};

/// The unique g with deg_{x_i}(g) < N and pi_{L_k}(g) = values[k].
Polynomial common_lifting(const SliceFamily& slices, const std::vector<Polynomial>& values, int jobs = 1);

/// Membership oracles for reconstructed basis elements.
struct GBCheck {
  GroebnerBasis basis;  // any Groebner basis of I over the full ring
};
struct Parametric {
  std::vector<Polynomial> coordinates;  // x_j = coordinates[j], all in one parameter ring
};
struct Trust {};
using MembershipOracle = std::variant<GBCheck, Parametric, Trust>;

bool oracle_accepts(const MembershipOracle& oracle, const Polynomial& g);

struct Reconstruction {
  GroebnerBasis basis;
  bool certified = false;  // false with the Trust oracle
};

/// Common lifting of reduced slice bases (one per gamma, over the section
/// ring, ordered by `order` restricted to it). Throws NonGenericSlices,
/// LTDrift or MembershipFailed.
Reconstruction reconstruct_gb(const SliceFamily& slices, const std::vector<GroebnerBasis>& slice_bases,
                              const TermOrder& order, const MembershipOracle& oracle, int jobs = 1);

/// Reduced slice bases of an ideal: the reduced sigma-hat basis of
/// pi_{L_k}(I) for each k, computed independently.
std::vector<GroebnerBasis> slice_bases(const SliceFamily& slices, const std::vector<Polynomial>& generators,
                                       const TermOrder& order, int jobs = 1);

enum class ImplicitMode { Eliminate, Slice };

struct ImplicitizeOptions {
  ImplicitMode mode = ImplicitMode::Eliminate;
  std::size_t pivot = 0;            // slice mode
  std::optional<std::size_t> slices;  // slice mode: initial N (default from a degree bound)
  std::vector<Rational> gammas;     // slice mode: explicit gammas (optional)
  int jobs = 1;
  int max_doublings = 4;
  GroebnerOptions groebner;
};

struct ImplicitizeResult {
  Polynomial equation;  // integer content 1, positive leading coefficient
  std::size_t slices_used = 0;
  std::vector<Rational> gammas;
};

/// Implicit equation of the hypersurface x_j = p_j(params). `xring` names the
/// coordinates; `order` (on xring) fixes the normalization and, in slice mode,
/// the lifting order. Throws NonPrincipal or ResourceLimit.
ImplicitizeResult implicitize(const Ring& xring, const std::vector<Polynomial>& param, const TermOrder& order,
                              const ImplicitizeOptions& options = {});

/// Checks used by the section and lifting code; exposed for tests.
bool is_minimal_basis(const TermOrder& order, const std::vector<Polynomial>& elems);
bool is_reduced_basis(const TermOrder& order, const std::vector<Polynomial>& elems);

}  // namespace slicegb
