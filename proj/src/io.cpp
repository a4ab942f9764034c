#include "slicegb/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "slicegb/parser.hpp"

namespace slicegb {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Non-blank lines with comments removed.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

/// Consumes an "order: name" line at `pos` if present.
std::optional<std::string> order_line(const std::vector<std::string>& lines, std::size_t& pos) {
  if (pos < lines.size() && lines[pos].rfind("order:", 0) == 0) return trim(std::string_view(lines[pos++]).substr(6));
  return std::nullopt;
}

const std::string& line_at(const std::vector<std::string>& lines, std::size_t pos, const char* what) {
  if (pos >= lines.size()) throw std::invalid_argument(std::string("missing ") + what);
  return lines[pos];
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Ring json_ring(const json& j) {
  if (j.is_string()) return parse_ring(j.get<std::string>());
  if (!j.is_array()) throw std::invalid_argument("a ring is a list of variable names");
  std::vector<std::string> names;
  for (const auto& v : j) names.push_back(as_string(v, "variable name"));
  return Ring(std::move(names));
}

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(trim(j.get<std::string>()));
  throw std::invalid_argument("a rational is an integer or a \"p/q\" string");
}

std::vector<Polynomial> json_polys(const Ring& ring, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("generators must be a list of strings");
  std::vector<Polynomial> out;
  for (const auto& g : j) out.push_back(parse_polynomial(ring, as_string(g, "generator")));
  return out;
}

Point json_point(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("a point is a list of rationals");
  Point p;
  for (const auto& c : j) p.push_back(json_rational(c));
  return p;
}

std::vector<Point> json_points(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("points must be a list");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(json_point(p));
  return out;
}

std::optional<std::string> json_order(const json& j) {
  if (j.is_object() && j.contains("order")) return as_string(j.at("order"), "order");
  return std::nullopt;
}

FamilyFile json_family(const json& j) {
  const Ring params = json_ring(field(j, "params"));
  const Ring vars = json_ring(field(j, "vars"));
  const Ring joint = vars.with_prefix(params.names());
  return FamilyFile{Family(params, vars, json_polys(joint, field(j, "generators"))), json_order(j)};
}

}  // namespace

bool looks_like_json(std::string_view text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  return b != std::string_view::npos && text[b] == '{';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IdealFile parse_ideal_file(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    IdealFile out{json_ring(field(j, "ring")), json_order(j), {}};
    out.generators = json_polys(out.ring, field(j, "generators"));
    return out;
  }
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  IdealFile out{parse_ring(line_at(lines, pos++, "ring header")), std::nullopt, {}};
  out.order = order_line(lines, pos);
  for (; pos < lines.size(); ++pos) out.generators.push_back(parse_polynomial(out.ring, lines[pos]));
  return out;
}

FamilyFile parse_family_file(std::string_view text) {
  if (looks_like_json(text)) return json_family(parse_json(text));
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  const Ring params = parse_ring(line_at(lines, pos++, "parameter ring header"));
  const Ring vars = parse_ring(line_at(lines, pos++, "variable ring header"));
  const Ring joint = vars.with_prefix(params.names());
  const auto order = order_line(lines, pos);
  std::vector<Polynomial> gens;
  for (; pos < lines.size(); ++pos) gens.push_back(parse_polynomial(joint, lines[pos]));
  return FamilyFile{Family(params, vars, std::move(gens)), order};
}

ParametrizationFile parse_parametrization_file(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    ParametrizationFile out{json_ring(field(j, "params")), json_ring(field(j, "vars")), json_order(j), {}};
    out.coordinates = json_polys(out.params, field(j, "coordinates"));
    if (out.coordinates.size() != out.vars.size())
      throw std::invalid_argument("one coordinate polynomial per variable is required");
    return out;
  }
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  ParametrizationFile out{parse_ring(line_at(lines, pos++, "parameter ring header")),
                          parse_ring(line_at(lines, pos++, "coordinate ring header")), std::nullopt, {}};
  out.order = order_line(lines, pos);
  for (; pos < lines.size(); ++pos) out.coordinates.push_back(parse_polynomial(out.params, lines[pos]));
  if (out.coordinates.size() != out.vars.size())
    throw std::invalid_argument("one coordinate polynomial per variable is required");
  return out;
}

SliceFile parse_slice_file(std::string_view text) {
  const json j = parse_json(text);
  const Ring ring = json_ring(field(j, "ring"));
  const std::size_t pivot = ring.require(as_string(field(j, "pivot"), "pivot"));
  SliceFile out{SliceFamily{ring, pivot, std::vector<Rational>(ring.size(), Rational(0)), {}}, json_order(j), {}};
  if (j.contains("tail")) {
    const json& tail = j.at("tail");
    if (!tail.is_object()) throw std::invalid_argument("tail must map variable names to rationals");
    for (const auto& [name, c] : tail.items()) out.slices.tail[ring.require(name)] = json_rational(c);
  }
  const Ring hat = ring.without(pivot);
  const json& slices = field(j, "slices");
  if (!slices.is_array()) throw std::invalid_argument("slices must be a list");
  for (const auto& s : slices) {
    out.slices.gammas.push_back(json_rational(field(s, "gamma")));
    out.generators.push_back(json_polys(hat, field(s, "generators")));
  }
  out.slices.validate();
  return out;
}

DetectFile parse_detect_file(std::string_view text) {
  const json j = parse_json(text);
  FamilyFile tmpl = json_family(field(j, "template"));
  DetectFile out{std::move(tmpl.family), json_order(j), std::nullopt, std::nullopt, {}, {}};
  if (!out.order) out.order = tmpl.order;
  if (j.contains("points")) out.points = json_points(j.at("points"));
  if (j.contains("slices")) {
    const std::string pivot = as_string(field(j, "pivot"), "pivot");
    if (j.contains("ring")) {
      out.ring = json_ring(j.at("ring"));
    } else {
      std::vector<std::string> names = out.plane_template.vars().names();
      names.push_back(pivot);
      out.ring = Ring(std::move(names));
    }
    out.pivot = out.ring->require(pivot);
    const json& slices = j.at("slices");
    if (!slices.is_array()) throw std::invalid_argument("slices must be a list");
    for (const auto& s : slices) {
      SliceData d{json_rational(field(s, "gamma")), std::vector<Point>{}};
      if (s.contains("generators"))
        d.data = Ideal(out.plane_template.vars(), json_polys(out.plane_template.vars(), s.at("generators")));
      else
        d.data = json_points(field(s, "points"));
      out.slices.push_back(std::move(d));
    }
  }
  return out;
}

LinearForm parse_linear_form(const Ring& ring, std::string_view text) {
  const Polynomial f = parse_polynomial(ring, text);
  if (f.is_zero() || f.is_constant() || f.total_degree() > 1)
    throw std::invalid_argument("a hyperplane needs a non-constant linear polynomial");
  std::size_t pivot = ring.size();
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < ring.size(); ++i)
      if (t.pp[i] > 0 && i < pivot) pivot = i;
  LinearForm l{pivot, std::vector<Rational>(ring.size(), Rational(0)), Rational(0)};
  PowerProduct lead(ring.size());
  lead.set(pivot, 1);
  const Rational c = *f.coefficient(lead);
  for (const auto& t : f.terms()) {
    if (t.pp.is_one()) {
      l.gamma = -t.coeff / c;
      continue;
    }
    for (std::size_t i = pivot + 1; i < ring.size(); ++i)
      if (t.pp[i] > 0) l.tail[i] = -t.coeff / c;
  }
  return l;
}

Point parse_point(std::string_view text) {
  Point out;
  std::string s(text);
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    const std::string piece = trim(std::string_view(s).substr(start, comma == std::string::npos ? s.npos : comma - start));
    if (piece.empty()) throw std::invalid_argument("empty coordinate in point");
    out.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace slicegb
