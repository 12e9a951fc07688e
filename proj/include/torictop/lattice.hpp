#pragma once

#include "torictop/exact.hpp"
#include "torictop/fans.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace torictop::lattice {

using fans::MultiFan;

using Point = std::array<Rational, 2>;

/// A multi-fan together with support numbers a_i; ray v_i cuts out the
/// hyperplane <u, v_i> = a_i and the half-space <u, v_i> <= a_i.
class MultiPolytope {
 public:
  MultiPolytope(MultiFan fan, IntVec support);

  const MultiFan& fan() const { return fan_; }
  const IntVec& support() const { return support_; }
  int dimension() const { return fan_.dimension(); }
  /// Same fan, supports scaled by q.
  MultiPolytope dilated(std::int64_t q) const;

 private:
  MultiFan fan_;
  IntVec support_;
};

/// Closed polygonal path through exact rational points, possibly
/// self-intersecting. Cyclically consecutive vertices are distinct.
class OrientedLoop {
 public:
  explicit OrientedLoop(std::vector<Point> vertices);
  static OrientedLoop from_lattice(const std::vector<std::array<std::int64_t, 2>>& vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  OrientedLoop reversed() const;
  OrientedLoop translated(const Point& offset) const;
  /// The loop traversed `times` times in a row.
  OrientedLoop repeated(int times) const;
  bool all_lattice() const;

 private:
  std::vector<Point> vertices_;
};

/// Exact value of turns + sum_k c_k * atan(q_k / p_k) / (2 pi), with canonical
/// coprime 0 < q_k < p_k. Lattice-vertex loops always produce an empty
/// arctangent part.
struct TurnSum {
  Rational turns = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> atan_terms;

  bool is_rational() const { return atan_terms.empty(); }
  TurnSum& operator+=(const TurnSum& rhs);
  TurnSum& operator-=(const TurnSum& rhs);
};

/// Argument of a nonzero integer direction, in turns, reduced by the
/// symmetries of the square to a rational part and at most one arctangent.
TurnSum direction_angle(std::int64_t x, std::int64_t y);

/// Sparse Laurent polynomial sum_u c_u t^u with no zero coefficients.
using LaurentSum = std::map<IntVec, std::int64_t>;

/// Loops of a planar multi-polytope, one per cycle of top faces. Each vertex
/// solves <u, v_i> = a_i, <u, v_j> = a_j for a top face {i, j}; the cycle is
/// walked from its smallest ray label towards the neighbour reached
/// counterclockwise. Consecutive repeated vertices are merged.
std::vector<OrientedLoop> boundary_loops(const MultiPolytope& p);
/// Throws InvalidInput unless there is exactly one cycle.
OrientedLoop boundary_loop(const MultiPolytope& p);

/// Signed number of turns of the loop around u; throws PointOnBoundary.
std::int64_t winding_number(const OrientedLoop& loop, const Point& u);
bool on_loop(const OrientedLoop& loop, const Point& u);

/// Twice the signed shoelace area.
Rational signed_area(const OrientedLoop& loop);

struct LatticeCount {
  std::int64_t count = 0;
  std::vector<IntVec> points;  // lexicographic order
};

/// Lattice points of {u : <u, v_i> <= a_i}, boundary included. Throws
/// PreconditionViolated if the region is unbounded.
LatticeCount count_lattice_points(const MultiPolytope& p);

/// Vertices of {u : <u, v_i> <= a_i} (lexicographic), after the boundedness check.
std::vector<std::vector<Rational>> polytope_vertices(const MultiPolytope& p);

struct EhrhartResult {
  std::vector<Rational> coefficients;  // a_0 .. a_n
  bool constant_is_one = false;
  bool consistent = false;             // checked at q = n+2 and n+3
  std::optional<Rational> volume;      // independent, n <= 3
  std::optional<Rational> boundary_volume;  // relative, n <= 3
  bool leading_is_volume = false;
  bool subleading_is_half_boundary = false;
};

/// Interpolates #(qP) at q = 1..n+1. Throws InvalidInput on a non-integral
/// vertex and PreconditionViolated if the extra evaluations disagree.
EhrhartResult ehrhart(const MultiPolytope& p);

struct PickReport {
  Rational area;
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
  bool holds = false;
};

/// Area = #interior + #boundary / 2 - 1 for a simple lattice polygon; the
/// three quantities are computed separately. Throws InvalidInput if the loop
/// is not simple or has a non-lattice vertex.
PickReport pick_check(const OrientedLoop& polygon);

/// Angle-weighted lattice point count: winding number off the loop, average
/// of the multiplicity over a small circle on the loop.
TurnSum solid_angle_count(const OrientedLoop& loop);

enum class IndexConvention { ClosedConvex, OpenInterior };

/// ClosedConvex: sum of t^u over lattice points of a convex polytope (ordinary
/// complete fan). OpenInterior: sum of m(u) t^u over lattice points off the
/// boundary of a planar multi-polytope, m = winding number.
LaurentSum equivariant_index(const MultiPolytope& p, IndexConvention convention);

struct TwelveReport {
  std::int64_t boundary = 0;
  std::int64_t dual_boundary = 0;
  std::int64_t sum = 0;
  std::vector<std::array<std::int64_t, 2>> dual_vertices;  // counterclockwise
};

/// P is the convex hull of the given lattice points and must have exactly one
/// interior lattice point; P is translated so that point is the origin.
/// Throws PreconditionViolated on a wrong interior count or a non-integral dual.
TwelveReport dual_polygon_twelve(const std::vector<std::array<std::int64_t, 2>>& points);

/// Vertices of the convex hull, counterclockwise, collinear points dropped.
std::vector<std::array<std::int64_t, 2>> convex_hull(std::vector<std::array<std::int64_t, 2>> points);

/// Experimental: c = I_w + B_w / 2 - A_w for a planar multi-polytope, where
/// I_w sums winding numbers off the boundary, B_w counts lattice points on the
/// boundary once per pass, and A_w is the winding-weighted area.
struct PickConstantReport {
  Rational weighted_area;
  std::int64_t interior_weighted = 0;
  std::int64_t boundary_passes = 0;
  Rational constant;
  std::optional<std::int64_t> todd_genus;
};

PickConstantReport pick_constant(const MultiPolytope& p);

}  // namespace torictop::lattice
