#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "slicegb/groebner.hpp"
#include "slicegb/rational_function.hpp"
#include "slicegb/section.hpp"

namespace slicegb {

using ParamGroebnerBasis = BasicGroebnerBasis<RationalFunction>;

/// A family I(a, x) in Q[a, x], read as ideals of Q[x] parametrized by a.
/// The joint ring lists the parameters first.
class Family {
 public:
  Family(Ring params, Ring vars, std::vector<Polynomial> generators);

  const Ring& params() const noexcept { return params_; }
  const Ring& vars() const noexcept { return vars_; }
  const Ring& joint() const noexcept { return joint_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  Ideal ideal() const { return Ideal(joint_, gens_); }

  std::size_t param_index(std::size_t j) const { return j; }
  std::size_t var_index(std::size_t i) const { return params_.size() + i; }

  /// f in Q[a][x] with polynomial coefficients.
  ParamPolynomial to_param(const Polynomial& f) const;
  /// f(alpha, x) in Q[x].
  Polynomial at_params(const Polynomial& f, std::span<const Rational> alpha) const;
  /// f(a, p) in Q[a].
  Polynomial at_point(const Polynomial& f, std::span<const Rational> p) const;
  /// Largest degree in the parameters over all generators.
  unsigned param_degree() const;

 private:
  Ring params_;
  Ring vars_;
  Ring joint_;
  std::vector<Polynomial> gens_;
};

/// The universal reduced sigma-Groebner basis: the reduced basis of the
/// extended ideal over Q(a). `order` acts on x. Throws DependentParameters
/// when the basis is {1}.
ParamGroebnerBasis param_gb(const Family& family, const TermOrder& order, const GroebnerOptions& options = {});

/// lcm of all coefficient denominators, integer content 1 and positive
/// leading coefficient under DegRevLex on the parameters.
Polynomial sigma_denominator(const ParamGroebnerBasis& basis);

/// Non-constant coefficients: elements by increasing leading term, each
/// walked in decreasing term order.
std::vector<RationalFunction> ncc_list(const ParamGroebnerBasis& basis);

/// Evaluates the coefficients at alpha. Throws DenominatorVanishes outside
/// the sigma-free set.
GroebnerBasis specialize_fiber(const ParamGroebnerBasis& basis, std::span<const Rational> alpha);

struct Independence {
  bool independent = false;
  std::optional<Polynomial> witness;  // nonzero element of I cap Q[a]
  bool agreement = false;             // elimination and param_gb agree
};

Independence params_independent(const Family& family, const GroebnerOptions& options = {});

struct SigmaScheme {
  std::vector<RationalFunction> coordinates;  // y_j = f_j / d_j
  std::optional<Ring> ring;                   // Q[y_1..y_s]; empty for a point
  std::vector<Polynomial> implicit;           // generators of the implicit ideal
  std::optional<int> dimension;
};

/// Parametric representation of the sigma-scheme and, on request, its
/// implicit ideal (denominators cleared, saturated by prod d_j, parameters
/// eliminated) and dimension.
SigmaScheme sigma_scheme(const ParamGroebnerBasis& basis, bool implicitize, const GroebnerOptions& options = {});

struct FamilySection {
  Family family;                      // generators pi_L(I(a, x))
  ParamGroebnerBasis basis;           // pi_L of the universal basis
  bool hypothesis_ok = false;         // every leading term preserved
  std::vector<std::size_t> offending;
  Independence independence;          // of the sectioned family
};

/// Sections a family by L (on x). Leading-term violations are reported, not
/// thrown; in that case `basis` is the recomputed universal basis of the
/// sectioned family when its parameters are independent, else empty.
FamilySection family_section(const Family& family, const LinearForm& l, const TermOrder& order,
                             const GroebnerOptions& options = {});

/// pi_L on a polynomial over Q(a).
ParamPolynomial apply_pi(const LinearForm& l, const ParamPolynomial& f);

}  // namespace slicegb
