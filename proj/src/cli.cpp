#include "torictop/cli.hpp"

#include "torictop/arrangement.hpp"
#include "torictop/cohomology.hpp"
#include "torictop/combinatorics.hpp"
#include "torictop/error.hpp"
#include "torictop/fans.hpp"
#include "torictop/json_io.hpp"
#include "torictop/lattice.hpp"
#include "torictop/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace torictop::cli {

using json_io::Json;

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{
      "hvec",  "check-g",   "check-cellsphere", "check-ds", "fan-validate",     "fan-std",
      "fan-iso", "todd",    "cox-kernel",       "facering", "dj",               "betti",
      "posetring", "hirzebruch-class", "boundary-loop", "winding", "count",     "ehrhart",
      "pick",  "solid-angle", "index",          "twelve",   "zk",               "wedge",
      "render"};
  return v;
}

namespace {

struct Options {
  std::string f, h, complex, fan, fan2, polytope, loop, poset, point, kind, twists, convention = "closed_convex",
                                                                           out;
  std::int64_t n = 2, a = 0, chi = 0, m = 0, k = 0;
  std::optional<std::int64_t> b;
  bool text = false, homology = false;
};

IntVec parse_list(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidInput("not an integer list: " + s);
    out.push_back(v);
  }
  return out;
}

combinatorics::HVector h_input(const Options& o) {
  if (!o.h.empty()) return {parse_list(o.h)};
  if (!o.f.empty()) return combinatorics::h_from_f({parse_list(o.f)});
  if (!o.complex.empty())
    return combinatorics::h_from_f(combinatorics::f_vector(json_io::complex_from_json(json_io::read_file(o.complex))));
  throw InvalidInput("one of --h, --f, --complex is required");
}

fans::MultiFan fan_input(const std::string& path) {
  if (path.empty()) throw InvalidInput("--fan is required");
  return json_io::fan_from_json(json_io::read_file(path));
}

lattice::MultiPolytope polytope_input(const Options& o) {
  if (o.polytope.empty()) throw InvalidInput("--polytope is required");
  return json_io::polytope_from_json(json_io::read_file(o.polytope));
}

lattice::OrientedLoop loop_input(const Options& o) {
  if (o.loop.empty()) throw InvalidInput("--loop is required");
  return json_io::loop_from_json(json_io::read_file(o.loop));
}

Json dims_json(const cohomology::GradedDims& g) { return Json(g.dims); }

Json presentation_json(const cohomology::RingPresentation& p, bool text) {
  Json j = json_io::to_json(p);
  if (text) j["text"] = p.to_text();
  return j;
}

std::string class_name(cohomology::RingClass c) { return c == cohomology::RingClass::Even ? "even" : "odd"; }

fans::MultiFan standard_fan(const Options& o) {
  const int n = static_cast<int>(o.n);
  if (o.kind == "cp") return fans::cp_fan(n);
  if (o.kind == "hirzebruch") return fans::hirzebruch_fan(o.a);
  if (o.kind == "s2n") return fans::s2n_fan(n);
  if (o.kind == "winding2") return fans::winding2_demo();
  if (o.kind == "bott") {
    if (n < 1 || n > 12) throw InvalidInput("bott needs 1 <= n <= 12");
    auto values = parse_list(o.twists);
    const auto need = static_cast<std::size_t>(n * (n - 1) / 2);
    if (!values.empty() && values.size() != need)
      throw InvalidInput("--twists needs n(n-1)/2 entries c_21,c_31,c_32,...");
    values.resize(need, 0);
    std::vector<IntVec> twists(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    std::size_t idx = 0;
    for (std::size_t j = 1; j < twists.size(); ++j)
      for (std::size_t kk = 0; kk < j; ++kk) twists[j][kk] = values[idx++];
    return fans::bott_fan(twists);
  }
  throw InvalidInput("unknown fan kind " + o.kind + " (cp, hirzebruch, bott, s2n, winding2)");
}

Json dispatch(const std::string& verb, const Options& o) {
  using namespace combinatorics;
  if (verb == "hvec") {
    if (!o.h.empty()) return Json{{"f", f_from_h({parse_list(o.h)}).entries}};
    if (!o.f.empty()) return Json{{"h", h_from_f({parse_list(o.f)}).entries}};
    if (!o.complex.empty()) {
      auto f = f_vector(json_io::complex_from_json(json_io::read_file(o.complex)));
      return Json{{"f", f.entries}, {"h", h_from_f(f).entries}};
    }
    throw InvalidInput("one of --f, --h, --complex is required");
  }
  if (verb == "check-g") {
    auto g = check_g_conditions(h_input(o));
    return Json{{"ds", g.ds},
                {"monotone", g.monotone},
                {"pseudopower", g.pseudopower},
                {"vertex_bound", g.vertex_bound},
                {"passed", g.passed()}};
  }
  if (verb == "check-cellsphere") {
    auto c = check_cell_sphere(h_input(o));
    return Json{{"symmetric", c.symmetric}, {"nonnegative", c.nonnegative}, {"parity", c.parity}, {"passed", c.passed()}};
  }
  if (verb == "check-ds") return Json{{"holds", check_generalized_ds(h_input(o), o.chi)}};
  if (verb == "fan-validate") {
    auto r = fans::validate(fan_input(o.fan));
    return Json{{"simplicial", r.simplicial}, {"nonsingular", r.nonsingular}, {"complete", r.complete}, {"euler", r.euler}};
  }
  if (verb == "fan-std") return json_io::to_json(standard_fan(o));
  if (verb == "fan-iso") {
    if (o.fan2.empty()) throw InvalidInput("--fan2 is required");
    auto g = fans::fans_isomorphic(fan_input(o.fan), fan_input(o.fan2));
    Json j{{"isomorphic", g.has_value()}};
    j["matrix"] = g ? json_io::to_json(*g) : Json(nullptr);
    return j;
  }
  if (verb == "todd") return Json{{"todd", fans::todd_genus(fan_input(o.fan))}};
  if (verb == "cox-kernel") return Json{{"kernel", json_io::to_json(fans::cox_kernel(fan_input(o.fan)))}};
  if (verb == "facering") {
    if (o.complex.empty()) throw InvalidInput("--complex is required");
    return presentation_json(cohomology::face_ring_presentation(json_io::complex_from_json(json_io::read_file(o.complex))),
                             o.text);
  }
  if (verb == "dj") return presentation_json(cohomology::dj_presentation(fan_input(o.fan)), o.text);
  if (verb == "betti") return Json{{"betti", dims_json(cohomology::betti_numbers(fan_input(o.fan)))}};
  if (verb == "posetring") {
    if (o.poset.empty()) throw InvalidInput("--poset is required");
    return presentation_json(cohomology::poset_face_ring(json_io::poset_from_json(json_io::read_file(o.poset))), o.text);
  }
  if (verb == "hirzebruch-class") {
    Json j{{"a", o.a},
           {"class", class_name(cohomology::hirzebruch_ring_class(o.a))},
           {"index", cohomology::square_zero_index(o.a)}};
    if (o.b) {
      j["b"] = *o.b;
      j["class_b"] = class_name(cohomology::hirzebruch_ring_class(*o.b));
      j["isomorphic"] = cohomology::hirzebruch_ring_class(o.a) == cohomology::hirzebruch_ring_class(*o.b);
    }
    return j;
  }
  if (verb == "boundary-loop") {
    Json loops = Json::array();
    for (const auto& l : lattice::boundary_loops(polytope_input(o))) loops.push_back(json_io::to_json(l));
    return Json{{"loops", loops}};
  }
  if (verb == "winding") {
    auto loop = loop_input(o);
    std::stringstream ss(o.point);
    std::string x, y;
    if (!std::getline(ss, x, ',') || !std::getline(ss, y)) throw InvalidInput("--point expects x,y");
    return Json{{"winding", lattice::winding_number(loop, {parse_rational(x), parse_rational(y)})}};
  }
  if (verb == "count") {
    auto c = lattice::count_lattice_points(polytope_input(o));
    return Json{{"count", c.count}, {"points", c.points}};
  }
  if (verb == "ehrhart") {
    auto r = lattice::ehrhart(polytope_input(o));
    Json coeffs = Json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(json_io::to_json(c));
    Json j{{"coefficients", coeffs}, {"constant_is_one", r.constant_is_one}, {"consistent", r.consistent}};
    if (r.volume) {
      j["volume"] = json_io::to_json(*r.volume);
      j["boundary_volume"] = json_io::to_json(*r.boundary_volume);
      j["leading_is_volume"] = r.leading_is_volume;
      j["subleading_is_half_boundary"] = r.subleading_is_half_boundary;
    }
    return j;
  }
  if (verb == "pick") {
    auto r = lattice::pick_check(loop_input(o));
    return Json{{"area", json_io::to_json(r.area)}, {"interior", r.interior}, {"boundary", r.boundary}, {"holds", r.holds}};
  }
  if (verb == "solid-angle") return json_io::to_json(lattice::solid_angle_count(loop_input(o)));
  if (verb == "index") {
    lattice::IndexConvention c;
    if (o.convention == "closed_convex") c = lattice::IndexConvention::ClosedConvex;
    else if (o.convention == "open_interior") c = lattice::IndexConvention::OpenInterior;
    else throw InvalidInput("--convention is closed_convex or open_interior");
    return Json{{"index", json_io::to_json(lattice::equivariant_index(polytope_input(o), c))}};
  }
  if (verb == "twelve") {
    std::vector<std::array<std::int64_t, 2>> pts;
    const auto loop = loop_input(o);
    for (const auto& p : loop.vertices()) {
      if (!is_integral(p[0]) || !is_integral(p[1])) throw InvalidInput("lattice points required");
      pts.push_back({to_int64(boost::multiprecision::numerator(p[0])), to_int64(boost::multiprecision::numerator(p[1]))});
    }
    auto r = lattice::dual_polygon_twelve(pts);
    return Json{{"b", r.boundary}, {"b_dual", r.dual_boundary}, {"sum", r.sum}, {"dual_vertices", r.dual_vertices}};
  }
  if (verb == "zk") {
    if (o.complex.empty()) throw InvalidInput("--complex is required");
    auto k = json_io::complex_from_json(json_io::read_file(o.complex));
    if (o.homology) {
      auto h = arrangement::homology(arrangement::zk_chain_complex(k));
      return Json{{"betti", h.betti}, {"torsion", h.torsion}};
    }
    Json cells = Json::array();
    for (const auto& c : arrangement::zk_cells(k))
      cells.push_back(Json{{"sigma", c.sigma}, {"tau", c.tau}, {"dim", c.dimension()}});
    return Json{{"cells", cells}};
  }
  if (verb == "wedge") {
    auto r = arrangement::verify_wedge(static_cast<int>(o.m), static_cast<int>(o.k));
    return Json{{"match", r.match && r.torsion_free}, {"betti", r.betti}};
  }
  if (verb == "render") {
    if (o.out.empty()) throw InvalidInput("--out is required");
    std::string svg;
    if (!o.fan.empty()) svg = svg::render_fan(fan_input(o.fan));
    else if (!o.loop.empty()) svg = svg::render_loops({loop_input(o)});
    else if (!o.polytope.empty()) svg = svg::render_loops(lattice::boundary_loops(polytope_input(o)));
    else throw InvalidInput("one of --fan, --loop, --polytope is required");
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << svg)) throw InvalidInput("cannot write " + o.out);
    return Json{{"written", o.out}, {"bytes", svg.size()}};
  }
  throw InvalidInput("unknown verb " + verb, "unknown_verb");
}

void add_options(CLI::App& sub, const std::string& verb, Options& o) {
  auto any = [&](std::initializer_list<const char*> names) {
    return std::any_of(names.begin(), names.end(), [&](const char* n) { return verb == n; });
  };
  if (any({"hvec", "check-g", "check-cellsphere", "check-ds"})) {
    sub.add_option("--f", o.f, "f-vector, comma separated");
    sub.add_option("--h", o.h, "h-vector, comma separated");
  }
  if (any({"hvec", "check-g", "check-cellsphere", "check-ds", "facering", "zk"}))
    sub.add_option("--complex", o.complex, "simplicial complex JSON");
  if (verb == "check-ds") sub.add_option("--chi", o.chi, "Euler characteristic of the manifold")->required();
  if (any({"fan-validate", "fan-iso", "todd", "cox-kernel", "dj", "betti", "render"}))
    sub.add_option("--fan", o.fan, "fan JSON");
  if (verb == "fan-iso") sub.add_option("--fan2", o.fan2, "second fan JSON");
  if (verb == "fan-std") {
    sub.add_option("--kind", o.kind, "cp, hirzebruch, bott, s2n, winding2")->required();
    sub.add_option("--n", o.n, "dimension");
    sub.add_option("--a", o.a, "Hirzebruch parameter");
    sub.add_option("--twists", o.twists, "Bott twists c_21,c_31,c_32,...");
  }
  if (any({"facering", "dj", "posetring"})) sub.add_flag("--text", o.text, "add a plain-text rendering");
  if (verb == "posetring") sub.add_option("--poset", o.poset, "simplicial poset JSON");
  if (verb == "hirzebruch-class") {
    sub.add_option("--a", o.a, "first parameter")->required();
    sub.add_option("--b", o.b, "second parameter");
  }
  if (any({"boundary-loop", "count", "ehrhart", "index", "render"}))
    sub.add_option("--polytope", o.polytope, "multi-polytope JSON");
  if (any({"winding", "pick", "solid-angle", "twelve", "render"})) sub.add_option("--loop", o.loop, "loop JSON");
  if (verb == "winding") sub.add_option("--point", o.point, "x,y (integers or p/q)")->required();
  if (verb == "index") sub.add_option("--convention", o.convention, "closed_convex or open_interior");
  if (verb == "zk") sub.add_flag("--homology", o.homology, "integral homology instead of the cell list");
  if (verb == "wedge") {
    sub.add_option("--m", o.m, "vertex count")->required();
    sub.add_option("--k", o.k, "skeleton parameter")->required();
  }
  if (verb == "render") sub.add_option("--out", o.out, "SVG output path");
}

int fail(std::ostream& out, int code, const std::string& tag, const std::string& detail) {
  out << Json{{"error", tag}, {"detail", detail}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) return fail(out, 2, "missing_verb", "usage: torictop <verb> [options]");
  const std::string& verb = args.front();
  const auto& known = verbs();
  if (std::find(known.begin(), known.end(), verb) == known.end())
    return fail(out, 2, "unknown_verb", "unknown verb: " + verb);

  Options o;
  CLI::App app{"torictop " + verb, "torictop " + verb};
  app.set_help_flag("--help", "print usage");
  add_options(app, verb, o);
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 consumes from the back
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(out, 2, "invalid_arguments", e.what());
  }

  try {
    out << dispatch(verb, o).dump() << '\n';
    return 0;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::InvalidInput: return fail(out, 2, e.code(), e.what());
      case ErrorKind::Precondition: return fail(out, 3, e.code(), e.what());
      case ErrorKind::SizeGuard: return fail(out, 4, e.code(), e.what());
    }
  } catch (const std::overflow_error& e) {
    return fail(out, 4, "overflow", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(out, 2, "invalid_input", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(out, 2, "invalid_input", e.what());
  }
  return 2;
}

}  // namespace torictop::cli
