#include "torictop/json_io.hpp"

#include "torictop/error.hpp"

#include <fstream>
#include <sstream>

namespace torictop::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

IntVec int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  IntVec out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<IntVec> int_lists(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of arrays");
  std::vector<IntVec> out;
  for (const auto& x : j) out.push_back(int_list(x, what));
  return out;
}

combinatorics::Face face_of(const IntVec& v) {
  combinatorics::Face f;
  for (auto x : v) f.push_back(static_cast<int>(x));
  return f;
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what(), "malformed_json");
  }
}

combinatorics::SimplicialComplex complex_from_json(const Json& j) {
  const auto m = as_int(field(j, "m"), "m");
  if (m < 0 || m > 64) throw InvalidInput("m out of range");
  std::vector<combinatorics::Face> facets;
  for (const auto& f : int_lists(field(j, "facets"), "facets")) facets.push_back(face_of(f));
  combinatorics::SimplicialComplex::Options opts;
  if (j.contains("allow_ghost_vertices")) opts.allow_ghost_vertices = j.at("allow_ghost_vertices").get<bool>();
  return combinatorics::SimplicialComplex::from_facets(static_cast<int>(m), std::move(facets), opts);
}

Json to_json(const combinatorics::SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(f);
  return Json{{"m", k.vertex_count()}, {"facets", facets}};
}

fans::MultiFan fan_from_json(const Json& j) {
  const auto n = as_int(field(j, "n"), "n");
  if (n < 1 || n > 16) throw InvalidInput("n out of range");
  auto rays = int_lists(field(j, "rays"), "rays");
  for (const auto& r : rays)
    if (static_cast<std::int64_t>(r.size()) != n) throw InvalidInput("ray of wrong length");
  std::vector<combinatorics::Face> faces;
  for (const auto& f : int_lists(field(j, "faces"), "faces")) faces.push_back(face_of(f));
  const int m = static_cast<int>(rays.size());
  auto k = combinatorics::SimplicialComplex::from_facets(m, std::move(faces));
  std::map<combinatorics::Face, fans::Weight> weights;
  if (j.contains("weights")) {
    for (const auto& w : j.at("weights")) {
      auto face = face_of(int_list(field(w, "face"), "face"));
      std::sort(face.begin(), face.end());
      weights[face] = fans::Weight{as_int(field(w, "wp"), "wp"), as_int(field(w, "wm"), "wm")};
    }
  }
  return fans::MultiFan(static_cast<int>(n), std::move(rays), std::move(k), std::move(weights));
}

Json to_json(const fans::MultiFan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(r);
  Json faces = Json::array();
  for (const auto& t : f.complex().facets()) faces.push_back(t);
  Json out{{"n", f.dimension()}, {"rays", rays}, {"faces", faces}};
  if (!f.is_ordinary()) {
    Json weights = Json::array();
    for (const auto& [face, w] : f.weights()) weights.push_back(Json{{"face", face}, {"wp", w.plus}, {"wm", w.minus}});
    out["weights"] = weights;
  }
  return out;
}

lattice::MultiPolytope polytope_from_json(const Json& j) {
  return lattice::MultiPolytope(fan_from_json(j), int_list(field(j, "support"), "support"));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("coordinate must be an integer or a \"p/q\" string");
}

lattice::OrientedLoop loop_from_json(const Json& j) {
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) throw InvalidInput("vertices must be an array");
  std::vector<lattice::Point> pts;
  for (const auto& v : vs) {
    if (!v.is_array() || v.size() != 2) throw InvalidInput("each vertex needs two coordinates");
    pts.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
  }
  return lattice::OrientedLoop(std::move(pts));
}

Json to_json(const lattice::OrientedLoop& loop) {
  Json vs = Json::array();
  for (const auto& p : loop.vertices()) vs.push_back(Json::array({to_json(p[0]), to_json(p[1])}));
  return Json{{"vertices", vs}};
}

combinatorics::SimplicialPoset poset_from_json(const Json& j) {
  std::vector<combinatorics::SimplicialPoset::Element> elements;
  std::map<std::string, std::size_t> by_name;
  for (const auto& e : field(j, "elements")) {
    auto name = field(e, "name").get<std::string>();
    if (!by_name.emplace(name, elements.size()).second) throw InvalidInput("duplicate element " + name);
    elements.push_back({name, static_cast<int>(as_int(field(e, "rank"), "rank"))});
  }
  auto resolve = [&](const Json& x) -> std::size_t {
    if (x.is_string()) {
      auto it = by_name.find(x.get<std::string>());
      if (it == by_name.end()) throw InvalidInput("unknown element " + x.get<std::string>());
      return it->second;
    }
    auto i = as_int(x, "order entry");
    if (i < 0 || static_cast<std::size_t>(i) >= elements.size()) throw InvalidInput("element index out of range");
    return static_cast<std::size_t>(i);
  };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (const auto& pair : field(j, "order")) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidInput("order entries are [lower, upper] pairs");
    rel.emplace_back(resolve(pair[0]), resolve(pair[1]));
  }
  return combinatorics::SimplicialPoset(std::move(elements), rel);
}

Json to_json(const cohomology::RingPresentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(Json{{"name", g.name}, {"deg", g.degree}});
  Json rels = Json::array();
  for (const auto& poly : p.relations) {
    Json terms = Json::array();
    for (const auto& t : poly) {
      Json mono = Json::array();
      for (const auto& [g, e] : t.mono) mono.push_back(Json::array({g, e}));
      terms.push_back(Json{{"coef", t.coef}, {"mono", mono}});
    }
    rels.push_back(terms);
  }
  return Json{{"gens", gens}, {"rels", rels}};
}

Json to_json(const Rational& r) {
  if (is_integral(r)) {
    Integer n = boost::multiprecision::numerator(r);
    if (boost::multiprecision::abs(n) <= Integer(std::numeric_limits<std::int64_t>::max()))
      return Json(n.convert_to<std::int64_t>());
  }
  return Json(to_string(r));
}

Json to_json(const lattice::LaurentSum& s) {
  Json out = Json::array();
  for (const auto& [u, c] : s) out.push_back(Json{{"u", u}, {"c", c}});
  return out;
}

Json to_json(const lattice::TurnSum& t) {
  Json out{{"turns", to_json(t.turns)}};
  if (!t.is_rational()) {
    Json terms = Json::array();
    for (const auto& [pq, c] : t.atan_terms)
      terms.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"c", to_json(Rational(c))}});
    out["atan"] = terms;
  }
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.to_rows()) out.push_back(row);
  return out;
}

}  // namespace torictop::json_io
