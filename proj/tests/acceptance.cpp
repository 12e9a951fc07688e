// One line per acceptance criterion; exit status is the number of failures.
#include "oracles.hpp"

#include "torictop/arrangement.hpp"
#include "torictop/cohomology.hpp"
#include "torictop/combinatorics.hpp"
#include "torictop/error.hpp"
#include "torictop/fans.hpp"
#include "torictop/lattice.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace torictop;
namespace cb = torictop::combinatorics;

namespace {

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const { return notes_.str() + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) + " more)" : ""); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

template <class V>
std::string show(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void pseudopower(Check& c) {
  c.expect(cb::binomial_decomposition(28, 4) == std::vector<std::int64_t>{6, 5, 3}, "decomposition of 28");
  c.expect(cb::pseudopower(28, 4) == 40, "28^<4> = " + std::to_string(cb::pseudopower(28, 4)));
  c.expect(binomial(6, 4) + binomial(5, 3) + binomial(3, 2) == 28, "binomial sum");
}

void g_theorem(Check& c) {
  std::vector<cb::SimplicialComplex> spheres{cb::boundary_of_simplex(2), cb::boundary_of_simplex(3),
                                             cb::boundary_of_simplex(4), cb::join_of_s0(3)};
  for (const auto& k : spheres) {
    auto h = cb::h_from_f(cb::f_vector(k));
    c.expect(cb::check_g_conditions(h).passed(), "sphere " + show(h.entries) + " fails");
  }
  auto bad = cb::check_g_conditions({{1, 0, 1}});
  c.expect(bad.ds && !bad.monotone, "(1,0,1) should fail monotonicity only");
  c.expect(!cb::check_cell_sphere({{1, 0, 1, 0, 1}}).parity, "(1,0,1,0,1) parity");
  c.expect(cb::check_cell_sphere({{1, 0, 2, 0, 1}}).passed(), "(1,0,2,0,1)");
}

void dehn_sommerville(Check& c) {
  struct Surface {
    oracle::Vec f;
    std::int64_t chi;
  };
  for (const auto& s : {Surface{{7, 21, 14}, 0}, Surface{{6, 15, 10}, 1}}) {
    const auto h = oracle::h_by_expansion(s.f);
    c.expect(cb::h_from_f({s.f}).entries == h, "h mismatch for f " + show(s.f));
    const auto n = static_cast<long>(s.f.size());
    const std::int64_t chi_sphere = n % 2 ? 2 : 0;  // chi(S^{n-1})
    for (long i = 1; i <= n; ++i) {
      const std::int64_t lhs = h[static_cast<std::size_t>(n - i)] - h[static_cast<std::size_t>(i)];
      const std::int64_t rhs = (i % 2 ? -1 : 1) * (s.chi - chi_sphere) * to_int64(binomial(n, i));
      c.expect(lhs == rhs, "identity at i = " + std::to_string(i) + " for f " + show(s.f));
    }
    c.expect(cb::check_generalized_ds({h}, s.chi), "library check for f " + show(s.f));
  }
}

std::vector<IntVec> ray_forms(const fans::MultiFan& f) {
  std::vector<IntVec> forms(static_cast<std::size_t>(f.dimension()), IntVec(f.ray_count(), 0));
  for (std::size_t i = 0; i < f.ray_count(); ++i)
    for (std::size_t j = 0; j < forms.size(); ++j) forms[j][i] = f.rays()[i][j];
  return forms;
}

void fan_dictionary(Check& c) {
  auto cp2 = fans::cp_fan(2);
  auto rep = fans::validate(cp2);
  c.expect(rep.complete && rep.nonsingular && rep.euler == 3, "cp(2) report");
  auto b = cohomology::betti_numbers(cp2).dims;
  auto h = cb::h_from_f(cb::f_vector(cp2.complex())).entries;
  c.expect(std::accumulate(b.begin(), b.end(), std::int64_t{0}) == 3 &&
               std::accumulate(h.begin(), h.end(), std::int64_t{0}) == 3,
           "Euler 3 = sum Betti = sum h");
  fans::MultiFan one_cone(2, {{1, 0}, {0, 1}}, cb::simplex(2));
  c.expect(!fans::validate(one_cone).complete, "single cone reported complete");
  auto against_oracle = [&](const fans::MultiFan& f, const IntVec& expect, const std::string& name) {
    auto dims = cohomology::betti_numbers(f).dims;
    c.expect(dims == expect, name + " betti " + show(dims));
    auto sm = cohomology::standard_monomial_count(f.complex(), ray_forms(f), 2 * f.dimension()).dims;
    c.expect(sm == dims, name + " standard monomials " + show(sm));
  };
  for (int n = 1; n <= 5; ++n) against_oracle(fans::cp_fan(n), IntVec(static_cast<std::size_t>(n + 1), 1), "cp(" + std::to_string(n) + ")");
  for (int a = -5; a <= 5; ++a) against_oracle(fans::hirzebruch_fan(a), {1, 2, 1}, "H_" + std::to_string(a));
}

void multi_fan_degrees(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    c.expect(fans::todd_genus(fans::cp_fan(n)) == 1, "todd cp(" + std::to_string(n) + ")");
    c.expect(fans::todd_genus(fans::s2n_fan(n)) == 0, "todd s2n(" + std::to_string(n) + ")");
  }
  auto w = fans::winding2_demo();
  c.expect(fans::todd_genus(w) == 2, "todd winding2");
  const auto battery = fans::generic_battery(w);
  c.expect(battery.size() == 64, "battery size");
  for (const auto& v : battery) c.expect(fans::degree_at(w, v) == 2, "winding2 degree at " + show(v));
}

// g carries rays of a onto rays of b and top faces onto top faces.
bool witness_ok(const IntMatrix& g, const fans::MultiFan& a, const fans::MultiFan& b) {
  if (std::abs(to_int64(determinant(g))) != 1) return false;
  std::vector<int> label(a.ray_count() + 1, 0);
  for (std::size_t i = 0; i < a.ray_count(); ++i) {
    IntVec img(2, 0);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) img[r] += to_int64(g(r, s)) * a.rays()[i][s];
    auto it = std::find(b.rays().begin(), b.rays().end(), img);
    if (it == b.rays().end()) return false;
    label[i + 1] = static_cast<int>(it - b.rays().begin()) + 1;
  }
  for (auto face : a.top_faces()) {
    for (auto& v : face) v = label[static_cast<std::size_t>(v)];
    std::sort(face.begin(), face.end());
    if (!b.complex().contains(face)) return false;
  }
  return true;
}

void hirzebruch(Check& c) {
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) {
      auto fa = fans::hirzebruch_fan(a), fb = fans::hirzebruch_fan(b);
      auto g = fans::fans_isomorphic(fa, fb);
      const bool expect = a == b || a == -b;
      c.expect(g.has_value() == expect, "H_" + std::to_string(a) + " vs H_" + std::to_string(b));
      if (g) c.expect(witness_ok(*g, fa, fb), "bad witness for " + std::to_string(a) + ", " + std::to_string(b));
    }
  for (int a = -8; a <= 8; ++a) {
    const auto cls = cohomology::hirzebruch_ring_class(a);
    c.expect((cls == cohomology::RingClass::Even) == (a % 2 == 0), "ring class of " + std::to_string(a));
    for (int b = -8; b <= 8; ++b)
      c.expect((cls == cohomology::hirzebruch_ring_class(b)) == oracle::hirzebruch_rings_isomorphic(a, b),
               "substitution search " + std::to_string(a) + ", " + std::to_string(b));
  }
}

void ehrhart(Check& c) {
  struct Case {
    std::string name;
    lattice::MultiPolytope p;
    std::vector<Rational> coefficients;
  };
  std::vector<Case> cases{
      {"square", lattice::MultiPolytope(fans::hirzebruch_fan(0), {1, 1, 0, 0}), {1, 2, 1}},
      {"triangle", lattice::MultiPolytope(fans::cp_fan(2), {1, 0, 0}), {1, Rational(3, 2), Rational(1, 2)}},
      {"cube", lattice::MultiPolytope(fans::bott_fan({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), {1, 1, 1, 0, 0, 0}), {1, 3, 3, 1}},
  };
  for (const auto& k : cases) {
    auto e = lattice::ehrhart(k.p);
    c.expect(e.coefficients == k.coefficients, k.name + " coefficients");
    c.expect(e.constant_is_one && e.consistent, k.name + " constant or consistency");
    c.expect(e.volume && e.leading_is_volume, k.name + " volume");
    c.expect(e.boundary_volume && e.subleading_is_half_boundary, k.name + " boundary volume");
  }
}

void pick(Check& c) {
  std::mt19937_64 rng(2024);
  int polygons = 0;
  for (int t = 0; t < 60; ++t, ++polygons) {
    auto v = t % 2 ? oracle::random_star(rng, 20) : oracle::random_convex(rng, 20);
    auto loop = lattice::OrientedLoop::from_lattice(v);
    auto r = lattice::pick_check(loop);
    auto [interior, boundary] = oracle::lattice_counts(v);
    const Rational area(oracle::twice_area(v), 2);
    c.expect(r.holds && r.area == area && r.interior == interior && r.boundary == boundary,
             "pick on polygon " + std::to_string(t));
    c.expect(area == interior + Rational(boundary, 2) - 1, "oracle pick on polygon " + std::to_string(t));
    auto s = lattice::solid_angle_count(loop);
    c.expect(s.is_rational() && s.turns == area, "solid angle on polygon " + std::to_string(t));
    c.expect(lattice::solid_angle_count(loop.repeated(2)).turns == 2 * area, "doubled polygon " + std::to_string(t));
  }
  c.expect(polygons >= 50, "corpus size");
}

void twelve(Check& c) {
  auto classes = oracle::reflexive_polygons();
  c.expect(classes.size() == 16, std::to_string(classes.size()) + " classes");
  for (const auto& hull : classes) c.expect(lattice::dual_polygon_twelve(hull).sum == 12, "sum for " + std::to_string(hull.size()) + "-gon");
}

void moment_angle(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (int m = 2; m <= 8; ++m)
    for (int k = 1; k <= m - 1; ++k) {
      auto r = arrangement::verify_wedge(m, k);
      c.expect(r.match && r.torsion_free, "wedge (" + std::to_string(m) + "," + std::to_string(k) + ")");
      if (k == m - 1) {
        std::vector<std::int64_t> sphere(static_cast<std::size_t>(2 * m), 0);
        sphere.front() = sphere.back() = 1;
        c.expect(r.betti == sphere, "S^" + std::to_string(2 * m - 1));
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60, "took " + std::to_string(secs) + " s");
  auto h = arrangement::homology(arrangement::zk_chain_complex(cb::join_of_s0(2)));
  c.expect(h.betti == std::vector<std::int64_t>{1, 0, 0, 2, 0, 0, 1} && h.torsion_free(), "S^3 x S^3");
}

void equivariant_index(Check& c) {
  auto tri = lattice::MultiPolytope(fans::cp_fan(2), {1, 0, 0});
  auto idx = lattice::equivariant_index(tri, lattice::IndexConvention::ClosedConvex);
  c.expect(idx.size() == 3, "triangle terms");
  for (const auto& [u, coef] : idx) c.expect(coef == 1, "coefficient at " + show(u));
  std::vector<lattice::MultiPolytope> fixtures{tri, lattice::MultiPolytope(fans::cp_fan(2), {1, 1, 0}),
                                               lattice::MultiPolytope(fans::hirzebruch_fan(0), {1, 1, 0, 0}),
                                               lattice::MultiPolytope(fans::bott_fan({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), {1, 1, 1, 0, 0, 0})};
  for (int a = -3; a <= 3; ++a) fixtures.emplace_back(fans::hirzebruch_fan(a), IntVec{3, 2, 1, 1});
  for (int n = 1; n <= 4; ++n) fixtures.emplace_back(fans::cp_fan(n), IntVec(static_cast<std::size_t>(n + 1), 1));
  for (const auto& p : fixtures) {
    std::int64_t sum = 0;
    for (const auto& [u, coef] : lattice::equivariant_index(p, lattice::IndexConvention::ClosedConvex)) sum += coef;
    c.expect(sum == lattice::count_lattice_points(p).count, "coefficient sum vs count");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"pseudopower 28^<4> = 40", pseudopower},
      {"g-theorem and cell-sphere conditions", g_theorem},
      {"generalized Dehn-Sommerville on torus and RP^2", dehn_sommerville},
      {"fan dictionary and Betti numbers", fan_dictionary},
      {"multi-fan degrees and Todd genera", multi_fan_degrees},
      {"Hirzebruch classification", hirzebruch},
      {"Ehrhart polynomials", ehrhart},
      {"Pick and solid-angle counts", pick},
      {"twelve-point theorem", twelve},
      {"moment-angle homology vs wedge prediction", moment_angle},
      {"equivariant index", equivariant_index},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("threw: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (!c.ok()) std::cout << " [" << c.notes() << "]";
    std::cout << '\n';
    failed += c.ok() ? 0 : 1;
  }
  return failed;
}
