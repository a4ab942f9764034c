#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slicegb/family.hpp"
#include "slicegb/hough.hpp"
#include "slicegb/section.hpp"

namespace slicegb {

/// Ideal file. Text form: a ring header "QQ[...]", an optional
/// "order: <name>" line, then one polynomial per line; '#' starts a comment.
/// JSON form: {"ring": [...], "order": "...", "generators": [...]}.
/// The form is chosen by the first non-blank character.
struct IdealFile {
  Ring ring;
  std::optional<std::string> order;
  std::vector<Polynomial> generators;
};

/// Family file. Text form: parameter ring header, variable ring header,
/// optional order line, then generators in both variable sets. JSON form:
/// {"params": [...], "vars": [...], "order": "...", "generators": [...]}.
struct FamilyFile {
  Family family;
  std::optional<std::string> order;
};

/// Parametrization file for implicitization. Text form: parameter ring
/// header, coordinate ring header, optional order line, then one coordinate
/// polynomial per line in coordinate order. JSON form: {"params": [...],
/// "vars": [...], "order": "...", "coordinates": [...]}.
struct ParametrizationFile {
  Ring params;
  Ring vars;
  std::optional<std::string> order;
  std::vector<Polynomial> coordinates;
};

/// Slice-set file (JSON): {"ring": [...], "order": "...", "pivot": name,
/// "tail": {name: "p/q", ...}, "slices": [{"gamma": "p/q", "generators":
/// [...]}, ...]}. Slice generators live in the ring without the pivot.
struct SliceFile {
  SliceFamily slices;
  std::optional<std::string> order;
  std::vector<std::vector<Polynomial>> generators;
};

/// Detection file (JSON): {"template": family, "ring": [...], "pivot": name,
/// "order": "...", "slices": [{"gamma": "p/q", "points": [[..], ..]} or
/// {"gamma": "p/q", "generators": [...]}], "points": [[..], ..]}. "points"
/// at top level feeds detect; "slices" feeds surface reconstruction. "ring"
/// defaults to the template variables with the pivot appended.
struct DetectFile {
  Family plane_template;
  std::optional<std::string> order;
  std::optional<Ring> ring;
  std::optional<std::size_t> pivot;
  std::vector<SliceData> slices;
  std::vector<Point> points;
};

bool looks_like_json(std::string_view text);

IdealFile parse_ideal_file(std::string_view text);
FamilyFile parse_family_file(std::string_view text);
ParametrizationFile parse_parametrization_file(std::string_view text);
SliceFile parse_slice_file(std::string_view text);
DetectFile parse_detect_file(std::string_view text);

/// Reads a whole file; throws std::invalid_argument when it cannot be opened.
std::string read_file(const std::string& path);

/// A linear polynomial c*x_i + ... with x_i its first variable, scaled to
/// x_i - (sum_{j>i} c_j x_j + gamma).
LinearForm parse_linear_form(const Ring& ring, std::string_view text);

/// Comma-separated rationals, e.g. "1,-2,3/4".
Point parse_point(std::string_view text);

}  // namespace slicegb
