#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "slicegb/family.hpp"
#include "slicegb/groebner.hpp"
#include "slicegb/section.hpp"

namespace slicegb {

using Point = std::vector<Rational>;

/// The Hough transform of a point: the parameters whose fiber passes
/// through it.
struct HoughResult {
  GroebnerBasis ideal;  // reduced, DegRevLex on the parameters
  int dimension = -1;
  bool empty = true;               // ideal is (1)
  std::optional<Point> solution;   // generators linear in a, dimension 0
};

/// Substitutes p for x and reduces in Q[a]. Throws std::invalid_argument on
/// an arity mismatch.
HoughResult hough_ideal(const Family& family, std::span<const Rational> p);

struct HoughDimension {
  int family_dimension = 0;  // dim F in Q[a, x]
  int image_dimension = 0;   // dim of the closure of the image in Q[x]
  int generic = 0;           // family_dimension - image_dimension
  bool dominant = false;     // the image is dense
  bool zero_certificate = false;  // dominant and dim F = n, so the transform is finite
};

HoughDimension generic_hough_dimension(const Family& family, const GroebnerOptions& options = {});

/// True iff every generator has degree at most one in the parameters.
bool linear_in_params(const Family& family);

/// The unique parameter point of a linear family through p. Throws
/// NotLinearInParams, Underdetermined or Inconsistent.
Point solve_linear_hough(const Family& family, std::span<const Rational> p);

struct Detected {
  Point alpha;
};
struct DetectedFamily {
  GroebnerBasis ideal;  // positive-dimensional solution set in Q[a]
  int dimension = 0;
};
struct DetectedNothing {};
using DetectionResult = std::variant<Detected, DetectedFamily, DetectedNothing>;

/// Intersects the Hough transforms of the points of a family linear in a.
/// A returned point is verified to carry every input point on its fiber.
/// Throws NotLinearInParams.
DetectionResult detect(const Family& family, const std::vector<Point>& points);

/// The parameters whose fiber polynomials all lie in the given ideal of
/// Q[x]: a curve given by equations instead of sample points.
DetectionResult detect_in_ideal(const Family& family, const Ideal& curve);

/// Data on one slice x_i = gamma: sample points or the curve's ideal, both
/// over the section ring.
struct SliceData {
  Rational gamma;
  std::variant<std::vector<Point>, Ideal> data;
};

/// Detects the curve on each slice with a one-generator template linear in
/// a, then lifts the specialized curves across the slices (axis-aligned on
/// `pivot`). The result is monic under `order`. Throws Underdetermined or
/// Inconsistent for a slice whose curve is not determined, and whatever
/// reconstruct_gb throws.
Polynomial reconstruct_surface(const Family& plane_template, const Ring& ring, std::size_t pivot,
                               const std::vector<SliceData>& slices, const TermOrder& order,
                               const MembershipOracle& oracle, int jobs = 1);

}  // namespace slicegb
