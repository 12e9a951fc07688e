#include "oracles.hpp"

#include "torictop/error.hpp"
#include "torictop/lattice.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace torictop;
using namespace torictop::lattice;
using oracle::P2;

namespace {

MultiPolytope unit_square() { return MultiPolytope(fans::hirzebruch_fan(0), {1, 1, 0, 0}); }
MultiPolytope small_triangle() { return MultiPolytope(fans::cp_fan(2), {1, 0, 0}); }
MultiPolytope big_triangle() { return MultiPolytope(fans::cp_fan(2), {1, 1, 0}); }
MultiPolytope unit_cube() {
  return MultiPolytope(fans::bott_fan({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), {1, 1, 1, 0, 0, 0});
}

OrientedLoop loop_of(const std::vector<P2>& v) { return OrientedLoop::from_lattice(v); }

std::vector<P2> lattice_vertices(const OrientedLoop& l) {
  std::vector<P2> out;
  for (const auto& p : l.vertices()) out.push_back({to_int64(floor_of(p[0])), to_int64(floor_of(p[1]))});
  return out;
}

Point pt(Rational x, Rational y) { return {x, y}; }

Rational weighted_open_count(const MultiPolytope& p) {
  Rational s = 0;
  for (const auto& [u, c] : equivariant_index(p, IndexConvention::OpenInterior)) s += c;
  return s;
}

}  // namespace

TEST(BoundaryLoop, Examples) {
  auto l = boundary_loop(small_triangle());
  EXPECT_EQ(lattice_vertices(l), (std::vector<P2>{{1, 0}, {0, 0}, {1, -1}}));
  EXPECT_EQ(lattice_vertices(boundary_loop(big_triangle())), (std::vector<P2>{{1, 1}, {-1, 1}, {1, -1}}));
  auto w = boundary_loop(MultiPolytope(fans::winding2_demo(), IntVec(7, 1)));
  EXPECT_EQ(w.size(), 7u);
  EXPECT_EQ(lattice_vertices(w),
            (std::vector<P2>{{1, 1}, {-2, 1}, {1, -2}, {1, 0}, {-1, 2}, {-1, -1}, {1, -1}}));
  EXPECT_EQ(winding_number(w, pt(0, 0)), 2);
}

TEST(BoundaryLoop, VertexPerTopFace) {
  auto l = boundary_loop(MultiPolytope(fans::cp_fan(2), {1, 2, 0}));
  EXPECT_TRUE(l.all_lattice());
  auto half = boundary_loop(MultiPolytope(fans::hirzebruch_fan(2), {1, 1, 0, 0}));
  EXPECT_EQ(half.size(), 4u);
}

TEST(Winding, Examples) {
  auto sq = loop_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(winding_number(sq, pt(Rational(1, 2), Rational(1, 2))), 1);
  EXPECT_EQ(winding_number(sq, pt(5, 5)), 0);
  EXPECT_EQ(winding_number(sq.repeated(2), pt(Rational(1, 2), Rational(1, 2))), 2);
  EXPECT_THROW(winding_number(sq, pt(1, Rational(1, 3))), PointOnBoundary);
  EXPECT_THROW(winding_number(sq, pt(0, 0)), PointOnBoundary);
}

TEST(Winding, TranslationInvariantAndOddUnderReversal) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int t = 0; t < 60; ++t) {
    auto v = t % 2 ? oracle::random_star(rng, 9) : oracle::random_convex(rng, 9);
    auto l = loop_of(v);
    const Point off{Rational(d(rng), 3), Rational(d(rng), 5)};
    for (int k = 0; k < 20; ++k) {
      const Point u{Rational(d(rng), 7), Rational(d(rng), 11)};
      if (on_loop(l, u)) continue;
      const auto w = winding_number(l, u);
      EXPECT_EQ(winding_number(l.reversed(), u), -w);
      EXPECT_EQ(winding_number(l.translated(off), Point{u[0] + off[0], u[1] + off[1]}), w);
      EXPECT_EQ(winding_number(l.repeated(3), u), 3 * w);
      const bool in = w != 0;
      EXPECT_TRUE(w == 0 || w == 1);
      // Even-odd on a point scaled to the lattice: 77 * u is integral.
      std::vector<P2> scaled;
      for (const auto& p : v) scaled.push_back({77 * p[0], 77 * p[1]});
      EXPECT_EQ(in, oracle::inside_even_odd(scaled, {to_int64(floor_of(u[0] * 77)), to_int64(floor_of(u[1] * 77))}));
    }
  }
}

TEST(Count, Examples) {
  EXPECT_EQ(count_lattice_points(unit_square()).count, 4);
  auto t = count_lattice_points(small_triangle());
  EXPECT_EQ(t.count, 3);
  EXPECT_EQ(t.points, (std::vector<IntVec>{{0, 0}, {1, -1}, {1, 0}}));
  EXPECT_EQ(count_lattice_points(big_triangle()).count, 6);
  EXPECT_EQ(count_lattice_points(unit_cube()).count, 8);
  EXPECT_THROW(count_lattice_points(MultiPolytope(fans::MultiFan(2, {{1, 0}, {0, 1}}, combinatorics::simplex(2)), {1, 1})),
               PreconditionViolated);
}

TEST(Ehrhart, Examples) {
  auto sq = ehrhart(unit_square());
  EXPECT_EQ(sq.coefficients, (std::vector<Rational>{1, 2, 1}));
  EXPECT_TRUE(sq.constant_is_one && sq.consistent && sq.leading_is_volume && sq.subleading_is_half_boundary);
  auto tri = ehrhart(small_triangle());
  EXPECT_EQ(tri.coefficients, (std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)}));
  EXPECT_EQ(*tri.volume, Rational(1, 2));
  EXPECT_EQ(*tri.boundary_volume, 3);
  auto cube = ehrhart(unit_cube());
  EXPECT_EQ(cube.coefficients, (std::vector<Rational>{1, 3, 3, 1}));
  EXPECT_TRUE(cube.leading_is_volume && cube.subleading_is_half_boundary);
  EXPECT_EQ(*cube.boundary_volume, 6);
}

TEST(Ehrhart, NonIntegralVertexRejected) {
  // Region 0 <= y <= x / 2, x <= 1 has the vertex (1, 1/2).
  EXPECT_THROW(ehrhart(MultiPolytope(fans::hirzebruch_fan(2), {1, 1, 0, 0})), InvalidInput);
}

TEST(Ehrhart, ConsistentAcrossFamilies) {
  for (int a = 0; a <= 3; ++a)
    for (std::int64_t s = 1; s <= 3; ++s) {
      MultiPolytope p(fans::hirzebruch_fan(a), {a * s + s, s, 0, 0});
      auto vs = polytope_vertices(p);
      bool integral = std::all_of(vs.begin(), vs.end(), [](const auto& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integral(r); });
      });
      if (!integral) continue;
      auto e = ehrhart(p);
      EXPECT_TRUE(e.constant_is_one);
      EXPECT_TRUE(e.consistent);
      EXPECT_TRUE(e.leading_is_volume);
      EXPECT_TRUE(e.subleading_is_half_boundary);
    }
  for (int n = 1; n <= 4; ++n) {
    auto e = ehrhart(MultiPolytope(fans::cp_fan(n), [&] {
      IntVec s(static_cast<std::size_t>(n + 1), 0);
      s[0] = 1;
      return s;
    }()));
    EXPECT_EQ(e.coefficients.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(e.coefficients[0], 1);
    EXPECT_TRUE(e.consistent);
  }
}

TEST(Pick, Examples) {
  auto sq = pick_check(loop_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(sq.area, 1);
  EXPECT_EQ(sq.interior, 0);
  EXPECT_EQ(sq.boundary, 4);
  EXPECT_TRUE(sq.holds);
  auto t = pick_check(loop_of({{0, 0}, {1, 0}, {1, -1}}));
  EXPECT_EQ(t.area, Rational(1, 2));
  EXPECT_EQ(t.boundary, 3);
  EXPECT_TRUE(t.holds);
  auto b = pick_check(boundary_loop(big_triangle()));
  EXPECT_EQ(b.area, 2);
  EXPECT_EQ(b.interior, 0);
  EXPECT_EQ(b.boundary, 6);
  EXPECT_TRUE(b.holds);
  EXPECT_THROW(pick_check(loop_of({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), InvalidInput);
  EXPECT_THROW(pick_check(OrientedLoop({pt(0, 0), pt(Rational(1, 2), 0), pt(0, 1)})), InvalidInput);
}

TEST(Pick, RandomPolygonsAgainstOracles) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 120; ++t) {
    auto v = t % 2 ? oracle::random_star(rng, 20) : oracle::random_convex(rng, 20);
    auto r = pick_check(loop_of(v));
    auto [interior, boundary] = oracle::lattice_counts(v);
    EXPECT_EQ(r.area, Rational(oracle::twice_area(v), 2));
    EXPECT_EQ(r.interior, interior);
    EXPECT_EQ(r.boundary, boundary);
    std::int64_t gsum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) gsum += oracle::gcd_len(v[i], v[(i + 1) % v.size()]);
    EXPECT_EQ(r.boundary, gsum);
    EXPECT_TRUE(r.holds);
  }
}

TEST(SolidAngle, Examples) {
  auto sq = loop_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto s = solid_angle_count(sq);
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s.turns, 1);
  EXPECT_EQ(solid_angle_count(sq.repeated(2)).turns, 2);
  EXPECT_EQ(solid_angle_count(boundary_loop(small_triangle())).turns, Rational(1, 2));
  EXPECT_EQ(solid_angle_count(loop_of({{0, 0}, {1, 0}, {1, -1}})).turns, Rational(-1, 2));
  EXPECT_EQ(solid_angle_count(sq.reversed()).turns, -1);
}

TEST(SolidAngle, EqualsShoelaceAreaOnRandomPolygons) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    auto v = t % 2 ? oracle::random_star(rng, 20) : oracle::random_convex(rng, 20);
    auto l = loop_of(v);
    auto s = solid_angle_count(l);
    ASSERT_TRUE(s.is_rational());
    EXPECT_EQ(s.turns, Rational(oracle::twice_area(v), 2));
    EXPECT_EQ(s.turns, pick_check(l).area);
    EXPECT_EQ(solid_angle_count(l.repeated(2)).turns, 2 * s.turns);
  }
}

TEST(SolidAngle, AdditiveUnderChordSplit) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 60; ++t) {
    auto v = oracle::random_convex(rng, 15);
    if (v.size() < 4) continue;
    const std::size_t k = 2 + static_cast<std::size_t>(t) % (v.size() - 3);
    std::vector<P2> a(v.begin(), v.begin() + static_cast<long>(k) + 1);
    std::vector<P2> b(v.begin() + static_cast<long>(k), v.end());
    b.push_back(v[0]);
    auto whole = solid_angle_count(loop_of(v));
    auto sum = solid_angle_count(loop_of(a));
    sum += solid_angle_count(loop_of(b));
    EXPECT_EQ(whole.turns, sum.turns);
    EXPECT_EQ(whole.atan_terms, sum.atan_terms);
  }
  // Self-intersecting: the winding-two polygon gives its weighted area.
  auto w = boundary_loop(MultiPolytope(fans::winding2_demo(), IntVec(7, 1)));
  auto sw = solid_angle_count(w);
  EXPECT_TRUE(sw.is_rational());
  EXPECT_EQ(sw.turns, signed_area(w) / 2);
}

TEST(SolidAngle, NonLatticeVertices) {
  OrientedLoop tri({pt(0, 0), pt(Rational(5, 2), 0), pt(0, Rational(5, 2))});
  auto s = solid_angle_count(tri);
  // Lattice points inside count 1, on the legs 1/2, the origin 1/4; the
  // hypotenuse x + y = 5/2 holds none.
  Rational expect = 0;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      if (x + y > 2) continue;
      const int zeros = (x == 0) + (y == 0);
      expect += zeros == 0 ? Rational(1) : zeros == 1 ? Rational(1, 2) : Rational(1, 4);
    }
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s.turns, expect);
}

TEST(Index, Examples) {
  auto closed = equivariant_index(small_triangle(), IndexConvention::ClosedConvex);
  EXPECT_EQ(closed, (LaurentSum{{{0, 0}, 1}, {{1, 0}, 1}, {{1, -1}, 1}}));
  EXPECT_TRUE(equivariant_index(MultiPolytope(fans::hirzebruch_fan(0), {-1, 1, 0, 0}), IndexConvention::ClosedConvex)
                  .empty());
  auto doubled = equivariant_index(MultiPolytope(fans::hirzebruch_fan(0), {2, 2, 0, 0}), IndexConvention::OpenInterior);
  EXPECT_EQ(doubled, (LaurentSum{{{1, 1}, 1}}));
  auto w = equivariant_index(MultiPolytope(fans::winding2_demo(), IntVec(7, 1)), IndexConvention::OpenInterior);
  EXPECT_EQ(w.at({0, 0}), 2);
  EXPECT_THROW(equivariant_index(MultiPolytope(fans::winding2_demo(), IntVec(7, 1)), IndexConvention::ClosedConvex),
               PreconditionViolated);
}

TEST(Index, ClosedSumEqualsCount) {
  std::vector<MultiPolytope> ps{unit_square(), small_triangle(), big_triangle(), unit_cube()};
  for (int a = -2; a <= 2; ++a) ps.emplace_back(fans::hirzebruch_fan(a), IntVec{3, 2, 1, 1});
  for (const auto& p : ps) {
    auto idx = equivariant_index(p, IndexConvention::ClosedConvex);
    std::int64_t sum = 0;
    for (const auto& [u, c] : idx) {
      EXPECT_EQ(c, 1);
      sum += c;
    }
    auto count = count_lattice_points(p);
    EXPECT_EQ(sum, count.count);
    std::vector<IntVec> keys;
    for (const auto& [u, c] : idx) keys.push_back(u);
    EXPECT_EQ(keys, count.points);
  }
}

TEST(Index, OpenInteriorDilationsAreQuadraticWithWeightedArea) {
  std::vector<MultiPolytope> ps{unit_square(), big_triangle(), MultiPolytope(fans::winding2_demo(), IntVec(7, 1)),
                                MultiPolytope(fans::hirzebruch_fan(1), IntVec{2, 1, 1, 1})};
  for (const auto& p : ps) {
    ASSERT_TRUE(boundary_loop(p).all_lattice());
    std::vector<Rational> c;
    for (int q = 1; q <= 4; ++q) c.push_back(weighted_open_count(p.dilated(q)));
    // Third finite difference vanishes and half the second equals the leading coefficient.
    EXPECT_EQ(c[3] - 3 * c[2] + 3 * c[1] - c[0], 0);
    EXPECT_EQ((c[2] - 2 * c[1] + c[0]) / 2, signed_area(boundary_loop(p)) / 2);
  }
}

TEST(Twelve, Examples) {
  auto d = dual_polygon_twelve({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  EXPECT_EQ(d.boundary, 4);
  EXPECT_EQ(d.dual_boundary, 8);
  EXPECT_EQ(d.sum, 12);
  auto s = dual_polygon_twelve({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  EXPECT_EQ(s.boundary, 8);
  EXPECT_EQ(s.dual_boundary, 4);
  auto t = dual_polygon_twelve({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_EQ(t.boundary, 3);
  EXPECT_EQ(t.dual_boundary, 9);
  EXPECT_EQ(t.sum, 12);
  EXPECT_THROW(dual_polygon_twelve({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), PreconditionViolated);
  // Translated input is moved so the interior point sits at the origin.
  EXPECT_EQ(dual_polygon_twelve({{4, 3}, {3, 4}, {2, 3}, {3, 2}}).sum, 12);
}

TEST(Twelve, AllReflexivePolygonsInTheBox) {
  auto classes = oracle::reflexive_polygons();
  EXPECT_EQ(classes.size(), 16u);
  std::set<std::int64_t> boundaries;
  for (const auto& hull : classes) {
    auto r = dual_polygon_twelve(hull);
    EXPECT_EQ(r.sum, 12);
    EXPECT_EQ(r.boundary, oracle::lattice_counts(hull).second);
    boundaries.insert(r.boundary);
  }
  EXPECT_EQ(boundaries, (std::set<std::int64_t>{3, 4, 5, 6, 7, 8, 9}));
}

TEST(PickConstant, ReportedForConstructedExamples) {
  auto sq = pick_constant(unit_square());
  EXPECT_EQ(sq.constant, 1);
  EXPECT_EQ(sq.todd_genus, 1);
  auto w = pick_constant(MultiPolytope(fans::winding2_demo(), IntVec(7, 1)));
  ::testing::Test::RecordProperty("winding2_constant", to_string(w.constant));
  ::testing::Test::RecordProperty("winding2_todd", w.todd_genus ? std::to_string(*w.todd_genus) : "none");
}
