#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slicegb/family.hpp"
#include "slicegb/groebner.hpp"
#include "slicegb/hough.hpp"
#include "slicegb/io.hpp"
#include "slicegb/parser.hpp"
#include "slicegb/section.hpp"

using namespace slicegb;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInput = 1, kHypothesis = 2, kResource = 3 };

struct Globals {
  std::string order;
  bool json = false;
  int jobs = 1;
  double timeout = 0;
};

Globals g_opts;

TermOrder choose_order(const Ring& ring, const std::optional<std::string>& from_file,
                       const std::string& fallback = "degrevlex") {
  if (!g_opts.order.empty()) return parse_order(g_opts.order, ring);
  if (from_file) return parse_order(*from_file, ring);
  return parse_order(fallback, ring);
}

GroebnerOptions groebner_options() {
  GroebnerOptions o;
  if (g_opts.timeout > 0)
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(g_opts.timeout));
  return o;
}

Json names(const Ring& r) { return Json(r.names()); }

template <class K>
Json poly_list(const TermOrder& order, const std::vector<BasicPolynomial<K>>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(print_polynomial(order, p));
  return out;
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string point_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

template <class K>
void print_lines(const TermOrder& order, const std::vector<BasicPolynomial<K>>& ps) {
  for (const auto& p : ps) std::cout << print_polynomial(order, p) << "\n";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_basis(const GroebnerBasis& gb, Json extra = Json::object()) {
  if (g_opts.json) {
    Json j;
    j["ring"] = names(gb.ring);
    j["order"] = gb.order.name(gb.ring);
    j["basis"] = poly_list(gb.order, gb.elements);
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(j);
    return;
  }
  print_lines(gb.order, gb.elements);
  for (auto& [k, v] : extra.items()) std::cout << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

IdealFile load_ideal(const std::string& path) { return parse_ideal_file(read_file(path)); }
FamilyFile load_family(const std::string& path) { return parse_family_file(read_file(path)); }

std::vector<std::size_t> variables_of(const Ring& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(ring.require(n));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Subcommand bodies. Each returns normally on success and throws on failure.

void run_gb(const std::string& file) {
  const IdealFile f = load_ideal(file);
  const TermOrder order = choose_order(f.ring, f.order);
  emit_basis(groebner_basis(order, Ideal(f.ring, f.generators), groebner_options()));
}

void run_nf(const std::string& file, const std::vector<std::string>& polys) {
  const IdealFile f = load_ideal(file);
  const TermOrder order = choose_order(f.ring, f.order);
  const GroebnerBasis gb = groebner_basis(order, Ideal(f.ring, f.generators), groebner_options());
  std::vector<Polynomial> out;
  for (const auto& p : polys)
    out.push_back(normal_form(order, parse_polynomial(f.ring, p), std::span<const Polynomial>(gb.elements)));
  if (g_opts.json) {
    emit(Json{{"normal_forms", poly_list(order, out)}});
    return;
  }
  print_lines(order, out);
}

void run_eliminate(const std::string& file, const std::vector<std::string>& vars) {
  const IdealFile f = load_ideal(file);
  const auto drop = variables_of(f.ring, vars);
  const Ideal e = eliminate(Ideal(f.ring, f.generators), drop, groebner_options());
  emit_basis(groebner_basis(TermOrder::degrevlex(e.ring().size()), e, groebner_options()));
}

void run_dim(const std::string& file) {
  const IdealFile f = load_ideal(file);
  const TermOrder order = choose_order(f.ring, f.order);
  const int d = dimension(Ideal(f.ring, f.generators), order);
  if (g_opts.json) {
    emit(Json{{"dimension", d}});
    return;
  }
  std::cout << d << "\n";
}

void run_colon(const std::string& file, const std::string& poly, bool saturate_flag) {
  const IdealFile f = load_ideal(file);
  const TermOrder order = choose_order(f.ring, f.order);
  const Ideal ideal(f.ring, f.generators);
  const Polynomial h = parse_polynomial(f.ring, poly);
  const Ideal r = saturate_flag ? saturate(ideal, h) : colon_ideal(ideal, h);
  emit_basis(groebner_basis(order, r, groebner_options()));
}

void run_section(const std::string& file, const std::string& form, bool homogeneous, const std::string& pivot) {
  const IdealFile f = load_ideal(file);
  if (homogeneous) {
    const Polynomial l = parse_polynomial(f.ring, form);
    if (l.is_zero() || l.total_degree() != 1 || !l.is_homogeneous())
      throw std::invalid_argument("a homogeneous hyperplane needs a linear form without constant term");
    std::size_t i = 0;
    if (!pivot.empty()) {
      i = f.ring.require(pivot);
    } else {
      for (const auto& t : l.terms())
        for (std::size_t v = 0; v < f.ring.size(); ++v)
          if (t.pp[v] > 0) i = std::max(i, v);
    }
    PowerProduct lead(f.ring.size());
    lead.set(i, 1);
    const Rational* c = l.coefficient(lead);
    if (!c) throw std::invalid_argument("the pivot does not occur in the linear form");
    HomLinearForm h{i, std::vector<Rational>(f.ring.size(), Rational(0))};
    for (const auto& t : l.terms())
      for (std::size_t v = 0; v < f.ring.size(); ++v)
        if (t.pp[v] > 0 && v != i) h.coeffs[v] = -t.coeff / *c;
    const TermOrder order = choose_order(f.ring, f.order, "degrev:" + f.ring.name(i));
    emit_basis(homogeneous_section_gb(Ideal(f.ring, f.generators), h, order));
    return;
  }
  const TermOrder order = choose_order(f.ring, f.order);
  const LinearForm l = parse_linear_form(f.ring, form);
  const GroebnerBasis gb = groebner_basis(order, Ideal(f.ring, f.generators), groebner_options());
  const SectionReport rep = section_gb(gb, l);
  emit_basis(rep.section, Json{{"nonzerodivisor", yes_no(rep.nonzerodivisor)},
                               {"reduced", yes_no(rep.section.is_reduced)}});
}

void run_lift(const std::string& file, const std::string& form, const std::string& basis_file) {
  const IdealFile f = load_ideal(file);
  const IdealFile b = load_ideal(basis_file);
  if (!(b.ring == f.ring)) throw std::invalid_argument("candidate basis and ideal use different rings");
  const TermOrder order = choose_order(f.ring, f.order);
  const GroebnerBasis gb = verify_lifting(Ideal(f.ring, f.generators), b.generators, parse_linear_form(f.ring, form), order);
  emit_basis(gb, Json{{"certified", "yes"}, {"reduced", yes_no(gb.is_reduced)}});
}

void run_common_lift(const std::string& file) {
  const SliceFile s = parse_slice_file(read_file(file));
  std::vector<Polynomial> values;
  for (const auto& g : s.generators) {
    if (g.size() != 1) throw std::invalid_argument("common-lift needs exactly one polynomial per slice");
    values.push_back(g.front());
  }
  const Polynomial h = common_lifting(s.slices, values, g_opts.jobs);
  const TermOrder order = choose_order(s.slices.ring, s.order);
  if (g_opts.json) {
    emit(Json{{"ring", names(s.slices.ring)}, {"lifting", print_polynomial(order, h)}});
    return;
  }
  std::cout << print_polynomial(order, h) << "\n";
}

MembershipOracle oracle_from(const std::string& ideal_file, const Ring& ring, const TermOrder& order) {
  if (ideal_file.empty()) return Trust{};
  const IdealFile f = load_ideal(ideal_file);
  if (!(f.ring == ring)) throw std::invalid_argument("oracle ideal uses a different ring");
  return GBCheck{groebner_basis(order, Ideal(f.ring, f.generators), groebner_options())};
}

void run_reconstruct(const std::string& file, const std::string& ideal_file) {
  const SliceFile s = parse_slice_file(read_file(file));
  const TermOrder order = choose_order(s.slices.ring, s.order);
  const TermOrder hat = order.restricted_without(s.slices.pivot);
  const Ring hat_ring = s.slices.section_ring();
  std::vector<GroebnerBasis> bases;
  for (const auto& g : s.generators) bases.push_back(groebner_basis(hat, Ideal(hat_ring, g), groebner_options()));
  const Reconstruction rec =
      reconstruct_gb(s.slices, bases, order, oracle_from(ideal_file, s.slices.ring, order), g_opts.jobs);
  emit_basis(rec.basis, Json{{"certified", yes_no(rec.certified)}});
}

void run_implicitize(const std::string& file, const std::string& mode, const std::string& pivot,
                     std::optional<std::size_t> slices) {
  const ParametrizationFile p = parse_parametrization_file(read_file(file));
  const TermOrder order = choose_order(p.vars, p.order);
  ImplicitizeOptions opts;
  if (mode == "slice")
    opts.mode = ImplicitMode::Slice;
  else if (mode != "eliminate")
    throw std::invalid_argument("mode must be eliminate or slice");
  opts.pivot = pivot.empty() ? p.vars.size() - 1 : p.vars.require(pivot);
  opts.slices = slices;
  opts.jobs = g_opts.jobs;
  opts.groebner = groebner_options();
  const ImplicitizeResult r = implicitize(p.vars, p.coordinates, order, opts);
  if (g_opts.json) {
    Json j{{"ring", names(p.vars)}, {"equation", print_polynomial(order, r.equation)}};
    if (opts.mode == ImplicitMode::Slice) {
      j["slices"] = r.slices_used;
      j["gammas"] = rational_list(r.gammas);
    }
    emit(j);
    return;
  }
  std::cout << print_polynomial(order, r.equation) << "\n";
  if (opts.mode == ImplicitMode::Slice) std::cout << "# slices: " << r.slices_used << "\n";
}

void emit_param_basis(const ParamGroebnerBasis& gb, const Ring& vars, Json extra = Json::object()) {
  if (g_opts.json) {
    Json j{{"vars", names(vars)}, {"order", gb.order.name(vars)}, {"basis", poly_list(gb.order, gb.elements)}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(j);
    return;
  }
  print_lines(gb.order, gb.elements);
  for (auto& [k, v] : extra.items()) std::cout << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

void run_family_gb(const std::string& file) {
  const FamilyFile f = load_family(file);
  const TermOrder order = choose_order(f.family.vars(), f.order);
  const ParamGroebnerBasis gb = param_gb(f.family, order, groebner_options());
  emit_param_basis(gb, f.family.vars(),
                   Json{{"denominator", print_polynomial(TermOrder::degrevlex(f.family.params().size()),
                                                         sigma_denominator(gb))}});
}

void run_ncc(const std::string& file) {
  const FamilyFile f = load_family(file);
  const TermOrder order = choose_order(f.family.vars(), f.order);
  const ParamGroebnerBasis gb = param_gb(f.family, order, groebner_options());
  const auto ncc = ncc_list(gb);
  const std::string d = print_polynomial(TermOrder::degrevlex(f.family.params().size()), sigma_denominator(gb));
  if (g_opts.json) {
    Json list = Json::array();
    for (const auto& q : ncc) list.push_back(to_string(q));
    emit(Json{{"ncc", list}, {"denominator", d}});
    return;
  }
  for (const auto& q : ncc) std::cout << to_string(q) << "\n";
  std::cout << "# denominator: " << d << "\n";
}

void run_sigma_scheme(const std::string& file, bool implicit) {
  const FamilyFile f = load_family(file);
  const TermOrder order = choose_order(f.family.vars(), f.order);
  const SigmaScheme s = sigma_scheme(param_gb(f.family, order, groebner_options()), implicit, groebner_options());
  Json coords = Json::array();
  for (const auto& q : s.coordinates) coords.push_back(to_string(q));
  Json imp = Json::array();
  if (s.ring) imp = poly_list(TermOrder::degrevlex(s.ring->size()), s.implicit);
  if (g_opts.json) {
    Json j{{"coordinates", coords}};
    if (implicit) {
      j["implicit"] = imp;
      j["dimension"] = s.dimension ? Json(*s.dimension) : Json(nullptr);
    }
    emit(j);
    return;
  }
  for (std::size_t k = 0; k < s.coordinates.size(); ++k)
    std::cout << "y" << (k + 1) << " = " << to_string(s.coordinates[k]) << "\n";
  if (implicit) {
    for (const auto& p : imp) std::cout << p.get<std::string>() << "\n";
    if (s.dimension) std::cout << "# dimension: " << *s.dimension << "\n";
  }
}

void run_independent(const std::string& file) {
  const FamilyFile f = load_family(file);
  const Independence ind = params_independent(f.family, groebner_options());
  const std::string witness =
      ind.witness ? print_polynomial(TermOrder::degrevlex(ind.witness->ring().size()), *ind.witness) : "";
  if (g_opts.json) {
    emit(Json{{"independent", ind.independent}, {"witness", ind.witness ? Json(witness) : Json(nullptr)}});
    return;
  }
  std::cout << "independent: " << yes_no(ind.independent) << "\n";
  if (ind.witness) std::cout << "witness: " << witness << "\n";
}

void run_family_section(const std::string& file, const std::string& form) {
  const FamilyFile f = load_family(file);
  const TermOrder order = choose_order(f.family.vars(), f.order);
  const FamilySection s = family_section(f.family, parse_linear_form(f.family.vars(), form), order, groebner_options());
  Json offending = Json::array();
  for (auto i : s.offending) offending.push_back(i);
  emit_param_basis(s.basis, s.family.vars(),
                   Json{{"hypothesis", s.hypothesis_ok ? "ok" : "violated"},
                        {"offending", offending},
                        {"independent", yes_no(s.independence.independent)}});
}

void run_hough(const std::string& file, const std::string& point, bool solve) {
  const FamilyFile f = load_family(file);
  const TermOrder aorder = TermOrder::degrevlex(f.family.params().size());
  if (point.empty()) {
    const HoughDimension d = generic_hough_dimension(f.family, groebner_options());
    if (g_opts.json) {
      emit(Json{{"family_dimension", d.family_dimension},
                {"image_dimension", d.image_dimension},
                {"generic_dimension", d.generic},
                {"dominant", d.dominant}});
      return;
    }
    std::cout << "family dimension: " << d.family_dimension << "\nimage dimension: " << d.image_dimension
              << "\ngeneric dimension: " << d.generic << "\ndominant: " << yes_no(d.dominant) << "\n";
    return;
  }
  const Point p = parse_point(point);
  if (solve) {
    const Point alpha = solve_linear_hough(f.family, p);
    if (g_opts.json) {
      emit(Json{{"solution", rational_list(alpha)}});
      return;
    }
    std::cout << point_text(alpha) << "\n";
    return;
  }
  const HoughResult h = hough_ideal(f.family, p);
  if (g_opts.json) {
    Json j{{"params", names(f.family.params())},
           {"ideal", poly_list(aorder, h.ideal.elements)},
           {"dimension", h.dimension},
           {"empty", h.empty}};
    j["solution"] = h.solution ? rational_list(*h.solution) : Json(nullptr);
    emit(j);
    return;
  }
  print_lines(aorder, h.ideal.elements);
  std::cout << "# dimension: " << h.dimension << "\n";
  if (h.solution) std::cout << "# solution: " << point_text(*h.solution) << "\n";
}

void run_detect(const std::string& file) {
  const DetectFile d = parse_detect_file(read_file(file));
  const DetectionResult r = detect(d.plane_template, d.points);
  const TermOrder aorder = TermOrder::degrevlex(d.plane_template.params().size());
  const TermOrder xorder = choose_order(d.plane_template.vars(), d.order);
  if (const auto* hit = std::get_if<Detected>(&r)) {
    std::vector<Polynomial> fiber;
    for (const auto& g : d.plane_template.generators()) fiber.push_back(d.plane_template.at_params(g, hit->alpha));
    if (g_opts.json) {
      emit(Json{{"result", "point"}, {"alpha", rational_list(hit->alpha)}, {"fiber", poly_list(xorder, fiber)}});
      return;
    }
    std::cout << "alpha: " << point_text(hit->alpha) << "\n";
    print_lines(xorder, fiber);
  } else if (const auto* fam = std::get_if<DetectedFamily>(&r)) {
    if (g_opts.json) {
      emit(Json{{"result", "family"}, {"dimension", fam->dimension}, {"ideal", poly_list(aorder, fam->ideal.elements)}});
      return;
    }
    std::cout << "underdetermined: dimension " << fam->dimension << "\n";
    print_lines(aorder, fam->ideal.elements);
  } else {
    if (g_opts.json) {
      emit(Json{{"result", "inconsistent"}});
      return;
    }
    std::cout << "inconsistent\n";
  }
}

void run_reconstruct_surface(const std::string& file, const std::string& ideal_file) {
  const DetectFile d = parse_detect_file(read_file(file));
  if (!d.ring || !d.pivot) throw std::invalid_argument("reconstruct-surface needs \"pivot\" and \"slices\"");
  const TermOrder order = choose_order(*d.ring, d.order);
  const Polynomial s = reconstruct_surface(d.plane_template, *d.ring, *d.pivot, d.slices, order,
                                           oracle_from(ideal_file, *d.ring, order), g_opts.jobs);
  if (g_opts.json) {
    emit(Json{{"ring", names(*d.ring)}, {"surface", print_polynomial(order, s)}});
    return;
  }
  std::cout << print_polynomial(order, s) << "\n";
}

void start_watchdog(double seconds) {
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cout.flush();
    std::fprintf(stderr, "error: ResourceLimit: timeout after %g s\n", seconds);
    std::fflush(stderr);
    std::_Exit(kResource);
  }).detach();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Groebner bases, hyperplane sections, parametric families and Hough transforms"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", g_opts.order, "term ordering: lex, deglex, degrevlex, degrev:<var>, elim:<k>");
  app.add_flag("--json", g_opts.json, "JSON output");
  app.add_option("--jobs", g_opts.jobs, "worker threads for per-slice work")->check(CLI::PositiveNumber);
  app.add_option("--timeout", g_opts.timeout, "wall-clock limit in seconds (exit 3 when reached)")
      ->check(CLI::NonNegativeNumber);

  std::function<void()> action;
  std::string file, form, basis_file, ideal_file, poly, pivot, point, mode = "eliminate";
  std::vector<std::string> polys, vars;
  bool flag_a = false;
  std::optional<std::size_t> slices;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", file, "input file")->required();
    return s;
  };

  sub("gb", "reduced Groebner basis")->callback([&] { action = [&] { run_gb(file); }; });
  auto* nf = sub("nf", "normal forms modulo the reduced basis");
  nf->add_option("--poly,-p", polys, "polynomial to reduce")->required();
  nf->callback([&] { action = [&] { run_nf(file, polys); }; });
  auto* el = sub("eliminate", "elimination ideal");
  el->add_option("--vars", vars, "variables to eliminate")->required()->delimiter(',');
  el->callback([&] { action = [&] { run_eliminate(file, vars); }; });
  sub("dim", "Krull dimension of P/I")->callback([&] { action = [&] { run_dim(file); }; });
  auto* co = sub("colon", "colon ideal (I : f) or saturation");
  co->add_option("--poly,-p", poly, "the polynomial f")->required();
  co->add_flag("--saturate", flag_a, "compute (I : f^infinity)");
  co->callback([&] { action = [&] { run_colon(file, poly, flag_a); }; });
  auto* se = sub("section", "section of the reduced basis by a hyperplane");
  se->add_option("--form,-l", form, "linear polynomial defining the hyperplane")->required();
  se->add_flag("--homogeneous", flag_a, "homogeneous section through rho/theta");
  se->add_option("--pivot", pivot, "pivot variable for --homogeneous");
  se->callback([&] { action = [&] { run_section(file, form, flag_a, pivot); }; });
  auto* li = sub("lift", "certify a candidate basis from its section");
  li->add_option("--form,-l", form, "linear polynomial defining the hyperplane")->required();
  li->add_option("--basis", basis_file, "candidate basis (ideal file)")->required();
  li->callback([&] { action = [&] { run_lift(file, form, basis_file); }; });
  sub("common-lift", "interpolate one polynomial per slice")->callback([&] { action = [&] { run_common_lift(file); }; });
  auto* re = sub("reconstruct", "reconstruct a Groebner basis from slice ideals");
  re->add_option("--ideal", ideal_file, "ideal file used to certify membership");
  re->callback([&] { action = [&] { run_reconstruct(file, ideal_file); }; });
  auto* im = sub("implicitize", "implicit equation of a parametrized hypersurface");
  im->add_option("--mode", mode, "eliminate or slice")->check(CLI::IsMember({"eliminate", "slice"}));
  im->add_option("--pivot", pivot, "slicing variable (slice mode)");
  im->add_option("--slices", slices, "initial number of slices (slice mode)");
  im->callback([&] { action = [&] { run_implicitize(file, mode, pivot, slices); }; });
  sub("family-gb", "universal reduced basis of a family")->callback([&] { action = [&] { run_family_gb(file); }; });
  sub("ncc", "non-constant coefficients of the universal basis")->callback([&] { action = [&] { run_ncc(file); }; });
  auto* ss = sub("sigma-scheme", "parametric sigma-scheme");
  ss->add_flag("--implicit", flag_a, "also compute its implicit ideal and dimension");
  ss->callback([&] { action = [&] { run_sigma_scheme(file, flag_a); }; });
  sub("independent", "test whether the parameters are independent")->callback([&] { action = [&] { run_independent(file); }; });
  auto* fs = sub("family-section", "section of a family by a hyperplane");
  fs->add_option("--form,-l", form, "linear polynomial in the family variables")->required();
  fs->callback([&] { action = [&] { run_family_section(file, form); }; });
  auto* ho = sub("hough", "Hough transform of a point, or the generic dimension without --point");
  ho->add_option("--point", point, "comma-separated coordinates");
  ho->add_flag("--solve", flag_a, "solve the linear case for the parameter point");
  ho->callback([&] { action = [&] { run_hough(file, point, flag_a); }; });
  sub("detect", "parameters of the fiber through all points")->callback([&] { action = [&] { run_detect(file); }; });
  auto* rs = sub("reconstruct-surface", "detect slice curves and lift them to a surface");
  rs->add_option("--ideal", ideal_file, "ideal file used to certify membership");
  rs->callback([&] { action = [&] { run_reconstruct_surface(file, ideal_file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (g_opts.timeout > 0) start_watchdog(g_opts.timeout);
  try {
    action();
    std::cout.flush();
    return kOk;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kHypothesis;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: ResourceLimit: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
