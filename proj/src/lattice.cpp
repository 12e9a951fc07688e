#include "torictop/lattice.hpp"

#include "torictop/error.hpp"
#include "torictop/integer_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace torictop::lattice {

namespace mp = boost::multiprecision;

using Lattice2 = std::array<std::int64_t, 2>;
using i128 = __int128;

// --------------------------------------------------------------------------
// MultiPolytope, OrientedLoop, TurnSum

MultiPolytope::MultiPolytope(MultiFan fan, IntVec support) : fan_(std::move(fan)), support_(std::move(support)) {
  if (support_.size() != fan_.ray_count()) throw InvalidInput("need one support number per ray");
}

MultiPolytope MultiPolytope::dilated(std::int64_t q) const {
  IntVec s = support_;
  for (auto& a : s) a = checked_mul(a, q);
  return MultiPolytope(fan_, std::move(s));
}

OrientedLoop::OrientedLoop(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("loop has no vertices");
  if (vertices_.size() > 1)
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == vertices_[(i + 1) % vertices_.size()])
        throw InvalidInput("loop has repeated consecutive vertices");
}

OrientedLoop OrientedLoop::from_lattice(const std::vector<Lattice2>& vertices) {
  std::vector<Point> pts;
  for (auto [x, y] : vertices) pts.push_back({Rational(x), Rational(y)});
  return OrientedLoop(std::move(pts));
}

OrientedLoop OrientedLoop::reversed() const {
  return OrientedLoop(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

OrientedLoop OrientedLoop::translated(const Point& offset) const {
  auto v = vertices_;
  for (auto& p : v) {
    p[0] += offset[0];
    p[1] += offset[1];
  }
  return OrientedLoop(std::move(v));
}

OrientedLoop OrientedLoop::repeated(int times) const {
  if (times < 1) throw InvalidInput("repeat count must be positive");
  std::vector<Point> v;
  for (int t = 0; t < times; ++t) v.insert(v.end(), vertices_.begin(), vertices_.end());
  if (vertices_.size() == 1) v.resize(1);
  return OrientedLoop(std::move(v));
}

bool OrientedLoop::all_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Point& p) { return is_integral(p[0]) && is_integral(p[1]); });
}

TurnSum& TurnSum::operator+=(const TurnSum& rhs) {
  turns += rhs.turns;
  for (const auto& [key, c] : rhs.atan_terms) {
    auto& slot = atan_terms[key];
    slot += c;
    if (slot == 0) atan_terms.erase(key);
  }
  return *this;
}

TurnSum& TurnSum::operator-=(const TurnSum& rhs) {
  turns -= rhs.turns;
  for (const auto& [key, c] : rhs.atan_terms) {
    auto& slot = atan_terms[key];
    slot -= c;
    if (slot == 0) atan_terms.erase(key);
  }
  return *this;
}

TurnSum direction_angle(std::int64_t x, std::int64_t y) {
  if (x == 0 && y == 0) throw InvalidInput("angle of the zero vector");
  TurnSum t;
  if (y == 0) { t.turns = x > 0 ? Rational(0) : Rational(1, 2); return t; }
  if (x == 0) { t.turns = y > 0 ? Rational(1, 4) : Rational(3, 4); return t; }
  const std::int64_t ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
  // Quadrant start (turns) and the local angle atan(s/t) from that axis.
  Rational base;
  std::int64_t s, u;
  if (x > 0 && y > 0) { base = 0; s = ay; u = ax; }
  else if (x < 0 && y > 0) { base = Rational(1, 4); s = ax; u = ay; }
  else if (x < 0 && y < 0) { base = Rational(1, 2); s = ay; u = ax; }
  else { base = Rational(3, 4); s = ax; u = ay; }
  const std::int64_t g = std::gcd(s, u);
  s /= g;
  u /= g;
  t.turns = base;
  if (s == u) {
    t.turns += Rational(1, 8);
  } else if (s < u) {
    t.atan_terms[{u, s}] = 1;
  } else {
    t.turns += Rational(1, 4);
    t.atan_terms[{s, u}] = -1;
  }
  return t;
}

// --------------------------------------------------------------------------
// exact planar helpers

namespace {

Integer num_of(const Rational& r) { return mp::numerator(r); }
Integer den_of(const Rational& r) { return mp::denominator(r); }

Integer lcm_int(const Integer& a, const Integer& b) { return a / mp::gcd(a, b) * b; }

struct Scaled {
  Integer scale = 1;
  std::vector<Lattice2> v;
};

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 61;

std::int64_t narrow(const Integer& x) {
  if (mp::abs(x) >= kCoordLimit) throw std::overflow_error("loop coordinates too large");
  return x.convert_to<std::int64_t>();
}

Scaled scale_points(const std::vector<Point>& pts, const std::vector<Point>& extra = {}) {
  Scaled s;
  for (const auto* list : {&pts, &extra})
    for (const auto& p : *list)
      for (const auto& c : p) s.scale = lcm_int(s.scale, den_of(c));
  for (const auto& p : pts) {
    Lattice2 q;
    for (int k = 0; k < 2; ++k) q[static_cast<std::size_t>(k)] = narrow(num_of(p[static_cast<std::size_t>(k)] * s.scale));
    s.v.push_back(q);
  }
  return s;
}

Lattice2 scale_point(const Point& p, const Integer& scale) {
  Lattice2 q;
  for (std::size_t k = 0; k < 2; ++k) {
    Rational c = p[k] * scale;
    if (!is_integral(c)) throw std::logic_error("point not on the scaled grid");
    q[k] = narrow(num_of(c));
  }
  return q;
}

i128 cross(const Lattice2& o, const Lattice2& a, const Lattice2& b) {
  return static_cast<i128>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<i128>(a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Lattice2& a, const Lattice2& b, const Lattice2& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool on_scaled_loop(const std::vector<Lattice2>& v, const Lattice2& p) {
  const std::size_t k = v.size();
  if (k == 1) return v[0] == p;
  for (std::size_t i = 0; i < k; ++i)
    if (on_segment(v[i], v[(i + 1) % k], p)) return true;
  return false;
}

// Winding number of a point known to be off the loop.
std::int64_t winding_scaled(const std::vector<Lattice2>& v, const Lattice2& p) {
  const std::size_t k = v.size();
  std::int64_t wn = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % k];
    if (a[1] <= p[1]) {
      if (b[1] > p[1] && cross(a, b, p) > 0) ++wn;
    } else if (b[1] <= p[1] && cross(a, b, p) < 0) {
      --wn;
    }
  }
  return wn;
}

// Precomputed loop for many lattice queries.
class LoopGrid {
 public:
  explicit LoopGrid(const OrientedLoop& loop) : scaled_(scale_points(loop.vertices())) {
    const auto& pts = loop.vertices();
    lo_ = hi_ = {floor_of(pts[0][0]), floor_of(pts[0][1])};
    for (const auto& p : pts)
      for (std::size_t c = 0; c < 2; ++c) {
        lo_[c] = std::min(lo_[c], floor_of(p[c]));
        hi_[c] = std::max(hi_[c], ceil_of(p[c]));
      }
  }

  Lattice2 lattice_to_scaled(std::int64_t x, std::int64_t y) const {
    return {narrow(Integer(x) * scaled_.scale), narrow(Integer(y) * scaled_.scale)};
  }
  bool on_loop(std::int64_t x, std::int64_t y) const {
    return on_scaled_loop(scaled_.v, lattice_to_scaled(x, y));
  }
  std::int64_t winding(std::int64_t x, std::int64_t y) const {
    return winding_scaled(scaled_.v, lattice_to_scaled(x, y));
  }
  template <class F>
  void for_each_box_point(F&& f) const {
    for (std::int64_t x = to_int64(lo_[0]); x <= to_int64(hi_[0]); ++x)
      for (std::int64_t y = to_int64(lo_[1]); y <= to_int64(hi_[1]); ++y) f(x, y);
  }

 private:
  Scaled scaled_;
  std::array<Integer, 2> lo_, hi_;
};

// Lattice points lying on the loop (each once).
std::set<Lattice2> lattice_points_on(const OrientedLoop& loop) {
  std::set<Lattice2> out;
  const auto& v = loop.vertices();
  const std::size_t k = v.size();
  auto add_if_lattice = [&](const Rational& x, const Rational& y) {
    if (is_integral(x) && is_integral(y)) out.insert({to_int64(num_of(x)), to_int64(num_of(y))});
  };
  if (k == 1) {
    add_if_lattice(v[0][0], v[0][1]);
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % k];
    const std::size_t axis = a[0] != b[0] ? 0 : 1;
    const std::size_t other = 1 - axis;
    Integer from = ceil_of(std::min(a[axis], b[axis])), to = floor_of(std::max(a[axis], b[axis]));
    for (Integer t = from; t <= to; ++t) {
      Rational s = (Rational(t) - a[axis]) / (b[axis] - a[axis]);
      Rational o = a[other] + s * (b[other] - a[other]);
      if (axis == 0) add_if_lattice(Rational(t), o);
      else add_if_lattice(o, Rational(t));
    }
  }
  return out;
}

IntVec primitive_direction(const Point& from, const Point& to) {
  Rational dx = to[0] - from[0], dy = to[1] - from[1];
  Integer den = lcm_int(den_of(dx), den_of(dy));
  IntVec d{to_int64(num_of(dx * den)), to_int64(num_of(dy * den))};
  return primitive_part(d);
}

int half_plane(const IntVec& d) { return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1; }

// Strict counterclockwise angle order on directions, starting at angle 0.
bool angle_less(const IntVec& a, const IntVec& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return static_cast<i128>(a[0]) * b[1] - static_cast<i128>(a[1]) * b[0] > 0;
}

struct Pass {
  IntVec back;  // towards where the loop came from
  IntVec out;   // towards where it goes next
};

std::vector<Pass> passes_through(const OrientedLoop& loop, const Point& u) {
  const auto& v = loop.vertices();
  const std::size_t k = v.size();
  std::vector<Pass> out;
  if (k == 1) return out;
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % k];
    if (a == u) {
      out.push_back({primitive_direction(u, v[(i + k - 1) % k]), primitive_direction(u, b)});
      continue;
    }
    if (b == u) continue;
    Rational cr = (b[0] - a[0]) * (u[1] - a[1]) - (b[1] - a[1]) * (u[0] - a[0]);
    if (cr != 0) continue;
    Rational dot = (u[0] - a[0]) * (b[0] - a[0]) + (u[1] - a[1]) * (b[1] - a[1]);
    Rational len = (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
    if (dot > 0 && dot < len) out.push_back({primitive_direction(u, a), primitive_direction(u, b)});
  }
  return out;
}

// Multiplicity of the loop just off u in direction r (r on no pass direction).
std::int64_t multiplicity_towards(const OrientedLoop& loop, const Point& u, const IntVec& r) {
  const auto& v = loop.vertices();
  const std::size_t k = v.size();
  Rational rx = r[0], ry = r[1];
  std::optional<Rational> nearest;
  auto consider = [&](const Rational& t) {
    if (t > 0 && (!nearest || t < *nearest)) nearest = t;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % k];
    Rational ex = b[0] - a[0], ey = b[1] - a[1];
    Rational wx = a[0] - u[0], wy = a[1] - u[1];
    Rational denom = rx * ey - ry * ex;
    if (denom != 0) {
      Rational t = (wx * ey - wy * ex) / denom;
      Rational s = (wx * ry - wy * rx) / denom;
      if (s >= 0 && s <= 1) consider(t);
    } else if (wx * ry - wy * rx == 0) {
      Rational rr = rx * rx + ry * ry;
      consider((wx * rx + wy * ry) / rr);
      consider(((b[0] - u[0]) * rx + (b[1] - u[1]) * ry) / rr);
    }
  }
  Rational eps = nearest ? *nearest / 2 : Rational(1);
  Point x{u[0] + eps * rx, u[1] + eps * ry};
  return winding_number(loop, x);
}

// omega(u) for a lattice point on the loop: average of the multiplicity over a
// small circle, from the jumps across each pass and one reference sector.
TurnSum omega_on_loop(const OrientedLoop& loop, const Point& u) {
  auto passes = passes_through(loop, u);
  std::vector<IntVec> dirs;
  for (const auto& p : passes) {
    dirs.push_back(p.back);
    dirs.push_back(p.out);
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  IntVec r;
  if (dirs.size() == 1) {
    r = {-dirs[0][1], dirs[0][0]};
  } else {
    const IntVec& a = dirs[0];
    const IntVec& b = dirs[1];
    i128 cr = static_cast<i128>(a[0]) * b[1] - static_cast<i128>(a[1]) * b[0];
    if (cr > 0) r = {a[0] + b[0], a[1] + b[1]};
    else if (cr == 0) r = {-a[1], a[0]};
    else r = {-(a[0] + b[0]), -(a[1] + b[1])};
  }
  TurnSum omega;
  omega.turns = multiplicity_towards(loop, u, r);
  for (const auto& p : passes) {
    omega -= direction_angle(p.out[0], p.out[1]);
    omega += direction_angle(p.back[0], p.back[1]);
    const int k_out = angle_less(p.out, r) ? 1 : 0;
    const int k_back = angle_less(p.back, r) ? 1 : 0;
    omega.turns -= k_out - k_back;
  }
  return omega;
}

// --------------------------------------------------------------------------
// half-space polytopes

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = next; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void require_bounded(const MultiPolytope& p) {
  const auto n = static_cast<std::size_t>(p.dimension());
  const auto& rays = p.fan().rays();
  if (rank(IntMatrix::from_rows(rays, n)) != n)
    throw PreconditionViolated("region is unbounded (normals do not span)", "unbounded");
  // The recession cone {d : <d, v_i> <= 0} is pointed; it is nonzero iff it
  // has an extreme ray, which is cut out by n-1 independent normals.
  for (const auto& subset : subsets_of_size(rays.size(), n - 1)) {
    std::vector<IntVec> rows;
    for (auto i : subset) rows.push_back(rays[i]);
    IntMatrix kernel = integer_kernel(IntMatrix::from_rows(rows, n));
    if (kernel.rows() != 1) continue;
    IntVec d = kernel.to_rows().front();
    for (int sign : {1, -1}) {
      bool recedes = true;
      for (const auto& v : rays) {
        i128 dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += static_cast<i128>(sign * d[j]) * v[j];
        if (dot > 0) {
          recedes = false;
          break;
        }
      }
      if (recedes) throw PreconditionViolated("region is unbounded", "unbounded");
    }
  }
}

bool satisfies_all(const MultiPolytope& p, const std::vector<Rational>& u) {
  const auto& rays = p.fan().rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Rational dot = 0;
    for (std::size_t j = 0; j < u.size(); ++j) dot += u[j] * rays[i][j];
    if (dot > p.support()[i]) return false;
  }
  return true;
}

Rational dot_with(const std::vector<Rational>& u, const IntVec& v) {
  Rational s = 0;
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * v[j];
  return s;
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<Rational> cross3(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot3(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::vector<Rational> centroid(const std::vector<std::vector<Rational>>& pts) {
  std::vector<Rational> c(pts.front().size(), Rational(0));
  for (const auto& p : pts)
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += p[j];
  for (auto& x : c) x /= static_cast<long>(pts.size());
  return c;
}

// Orders points of a plane with normal `normal` counterclockwise around c.
void sort_around(std::vector<std::vector<Rational>>& pts, const std::vector<Rational>& c,
                 const std::vector<Rational>& normal) {
  const auto ref = sub(pts.front(), c);
  auto half = [&](const std::vector<Rational>& w) {
    Rational s = dot3(normal, cross3(ref, w));
    if (s > 0) return 0;
    if (s == 0 && dot3(ref, w) > 0) return 0;
    return 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
    auto wp = sub(p, c), wq = sub(q, c);
    int hp = half(wp), hq = half(wq);
    if (hp != hq) return hp < hq;
    return dot3(normal, cross3(wp, wq)) > 0;
  });
}

struct VolumeData {
  Rational volume;
  Rational boundary;
};

std::optional<VolumeData> independent_volume(const MultiPolytope& p,
                                             const std::vector<std::vector<Rational>>& verts) {
  const int n = p.dimension();
  if (verts.empty()) return VolumeData{0, 0};
  if (n == 1) {
    auto [lo, hi] = std::minmax_element(verts.begin(), verts.end());
    Rational len = (*hi)[0] - (*lo)[0];
    return VolumeData{len, len > 0 ? Rational(2) : Rational(1)};
  }
  if (n == 2) {
    auto pts = verts;
    if (pts.size() < 3) return VolumeData{0, 0};
    auto c = centroid(pts);
    std::vector<Rational> lifted_c{c[0], c[1], Rational(0)};
    std::vector<std::vector<Rational>> lifted;
    for (const auto& q : pts) lifted.push_back({q[0], q[1], Rational(0)});
    sort_around(lifted, lifted_c, {Rational(0), Rational(0), Rational(1)});
    Rational twice = 0, boundary = 0;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      const auto& a = lifted[i];
      const auto& b = lifted[(i + 1) % lifted.size()];
      twice += a[0] * b[1] - a[1] * b[0];
      Integer dx = mp::abs(num_of(b[0] - a[0])), dy = mp::abs(num_of(b[1] - a[1]));
      boundary += Rational(mp::gcd(dx, dy));
    }
    return VolumeData{mp::abs(twice) / 2, boundary};
  }
  if (n == 3) {
    if (verts.size() < 4) return VolumeData{0, 0};
    const auto c = centroid(verts);
    Rational vol = 0, boundary = 0;
    const auto& rays = p.fan().rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      std::vector<std::vector<Rational>> face;
      for (const auto& v : verts)
        if (dot_with(v, rays[i]) == p.support()[i]) face.push_back(v);
      if (face.size() < 3) continue;
      std::vector<Rational> normal(rays[i].begin(), rays[i].end());
      bool planar2 = false;
      for (std::size_t a = 1; a < face.size() && !planar2; ++a)
        for (std::size_t b = a + 1; b < face.size() && !planar2; ++b) {
          auto cr = cross3(sub(face[a], face[0]), sub(face[b], face[0]));
          planar2 = cr[0] != 0 || cr[1] != 0 || cr[2] != 0;
        }
      if (!planar2) continue;
      sort_around(face, centroid(face), normal);
      std::size_t axis = 0;
      while (rays[i][axis] == 0) ++axis;
      for (std::size_t k = 1; k + 1 < face.size(); ++k) {
        auto e1 = sub(face[k], face[0]), e2 = sub(face[k + 1], face[0]);
        auto cr = cross3(e1, e2);
        boundary += mp::abs(cr[axis] / rays[i][axis]) / 2;
        vol += mp::abs(dot3(sub(face[0], c), cross3(sub(face[k], c), sub(face[k + 1], c)))) / 6;
      }
    }
    return VolumeData{vol, boundary};
  }
  return std::nullopt;
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences, then expand to monomial coefficients.
  const std::size_t k = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  std::vector<Rational> coeffs(k, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * xs[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool segments_intersect(const Lattice2& a, const Lattice2& b, const Lattice2& c, const Lattice2& d) {
  auto sgn = [](i128 v) { return (v > 0) - (v < 0); };
  int d1 = sgn(cross(a, b, c)), d2 = sgn(cross(a, b, d));
  int d3 = sgn(cross(c, d, a)), d4 = sgn(cross(c, d, b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(a, b, c)) || (d2 == 0 && on_segment(a, b, d)) ||
         (d3 == 0 && on_segment(c, d, a)) || (d4 == 0 && on_segment(c, d, b));
}

bool is_simple(const std::vector<Lattice2>& v) {
  const std::size_t k = v.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % k];
      const auto& c = v[j];
      const auto& d = v[(j + 1) % k];
      const bool adjacent = j == i + 1 || (i == 0 && j == k - 1);
      if (!adjacent) {
        if (segments_intersect(a, b, c, d)) return false;
        continue;
      }
      // Shared vertex; the edges must not fold back over each other.
      const Lattice2& shared = j == i + 1 ? b : a;
      const Lattice2& p = j == i + 1 ? a : b;
      const Lattice2& q = j == i + 1 ? d : c;
      if (cross(shared, p, q) == 0) {
        i128 dot = static_cast<i128>(p[0] - shared[0]) * (q[0] - shared[0]) +
                   static_cast<i128>(p[1] - shared[1]) * (q[1] - shared[1]);
        if (dot > 0) return false;
      }
    }
  return true;
}

std::int64_t lattice_length(const Lattice2& a, const Lattice2& b) {
  return std::gcd(b[0] - a[0], b[1] - a[1]);
}

}  // namespace

// --------------------------------------------------------------------------
// public operations

bool on_loop(const OrientedLoop& loop, const Point& u) {
  Scaled s = scale_points(loop.vertices(), {u});
  return on_scaled_loop(s.v, scale_point(u, s.scale));
}

std::int64_t winding_number(const OrientedLoop& loop, const Point& u) {
  Scaled s = scale_points(loop.vertices(), {u});
  Lattice2 p = scale_point(u, s.scale);
  if (on_scaled_loop(s.v, p)) throw PointOnBoundary("point lies on the loop");
  return winding_scaled(s.v, p);
}

Rational signed_area(const OrientedLoop& loop) {
  const auto& v = loop.vertices();
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice;
}

std::vector<OrientedLoop> boundary_loops(const MultiPolytope& p) {
  const MultiFan& fan = p.fan();
  if (fan.dimension() != 2) throw InvalidInput("boundary loops need a planar multi-polytope");
  const int m = static_cast<int>(fan.ray_count());
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(m + 1));
  for (const auto& top : fan.top_faces()) {
    nbr[static_cast<std::size_t>(top[0])].push_back(top[1]);
    nbr[static_cast<std::size_t>(top[1])].push_back(top[0]);
  }
  for (int i = 1; i <= m; ++i)
    if (nbr[static_cast<std::size_t>(i)].size() != 2)
      throw InvalidInput("top faces do not form cycles (ray " + std::to_string(i) + ")");

  auto corner = [&](int i, int j) {
    IntMatrix a = IntMatrix::from_rows({fan.ray(i), fan.ray(j)}, 2);
    auto sol = solve(a, {Rational(p.support()[static_cast<std::size_t>(i - 1)]),
                         Rational(p.support()[static_cast<std::size_t>(j - 1)])});
    if (!sol || determinant(a) == 0)
      throw InvalidInput("parallel hyperplanes in face {" + std::to_string(i) + "," + std::to_string(j) + "}");
    return Point{(*sol)[0], (*sol)[1]};
  };
  auto det2 = [&](int i, int j) {
    const auto& a = fan.ray(i);
    const auto& b = fan.ray(j);
    return a[0] * b[1] - a[1] * b[0];
  };

  std::vector<char> seen(static_cast<std::size_t>(m + 1), 0);
  std::vector<OrientedLoop> loops;
  for (int start = 1; start <= m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    auto nb = nbr[static_cast<std::size_t>(start)];
    std::sort(nb.begin(), nb.end());
    int next = nb[0];
    if (det2(start, nb[0]) <= 0 && det2(start, nb[1]) > 0) next = nb[1];
    std::vector<Point> pts;
    int prev = start, cur = next;
    seen[static_cast<std::size_t>(start)] = 1;
    pts.push_back(corner(start, cur));
    while (cur != start) {
      seen[static_cast<std::size_t>(cur)] = 1;
      const auto& cn = nbr[static_cast<std::size_t>(cur)];
      int after = cn[0] == prev ? cn[1] : cn[0];
      pts.push_back(corner(cur, after));
      prev = cur;
      cur = after;
    }
    std::vector<Point> merged;
    for (auto& q : pts)
      if (merged.empty() || merged.back() != q) merged.push_back(std::move(q));
    while (merged.size() > 1 && merged.back() == merged.front()) merged.pop_back();
    loops.emplace_back(std::move(merged));
  }
  return loops;
}

OrientedLoop boundary_loop(const MultiPolytope& p) {
  auto loops = boundary_loops(p);
  if (loops.size() != 1) throw InvalidInput("multi-polytope has more than one boundary cycle");
  return loops.front();
}

std::vector<std::vector<Rational>> polytope_vertices(const MultiPolytope& p) {
  require_bounded(p);
  const auto n = static_cast<std::size_t>(p.dimension());
  const auto& rays = p.fan().rays();
  std::set<std::vector<Rational>> found;
  for (const auto& subset : subsets_of_size(rays.size(), n)) {
    std::vector<IntVec> rows;
    std::vector<Rational> rhs;
    for (auto i : subset) {
      rows.push_back(rays[i]);
      rhs.emplace_back(p.support()[i]);
    }
    IntMatrix a = IntMatrix::from_rows(rows, n);
    if (determinant(a) == 0) continue;
    auto sol = solve(a, rhs);
    if (sol && satisfies_all(p, *sol)) found.insert(*sol);
  }
  return {found.begin(), found.end()};
}

LatticeCount count_lattice_points(const MultiPolytope& p) {
  auto verts = polytope_vertices(p);
  LatticeCount out;
  if (verts.empty()) return out;
  const auto n = static_cast<std::size_t>(p.dimension());
  IntVec lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = to_int64(ceil_of(mn));
    hi[j] = to_int64(floor_of(mx));
    if (lo[j] > hi[j]) return out;
  }
  const auto& rays = p.fan().rays();
  IntVec u = lo;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < rays.size() && inside; ++i) {
      i128 dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += static_cast<i128>(u[j]) * rays[i][j];
      inside = dot <= p.support()[i];
    }
    if (inside) out.points.push_back(u);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (u[j] < hi[j]) {
        ++u[j];
        for (std::size_t t = j + 1; t < n; ++t) u[t] = lo[t];
        break;
      }
      if (j == 0) {
        out.count = static_cast<std::int64_t>(out.points.size());
        return out;
      }
    }
  }
}

EhrhartResult ehrhart(const MultiPolytope& p) {
  const int n = p.dimension();
  auto verts = polytope_vertices(p);
  for (const auto& v : verts)
    for (const auto& c : v)
      if (!is_integral(c)) throw InvalidInput("polytope has a non-integral vertex", "non_integral_vertex");
  std::vector<Rational> xs, ys;
  for (int q = 1; q <= n + 1; ++q) {
    xs.emplace_back(q);
    ys.emplace_back(count_lattice_points(p.dilated(q)).count);
  }
  EhrhartResult r;
  r.coefficients = interpolate(xs, ys);
  r.consistent = true;
  for (int q = n + 2; q <= n + 3; ++q)
    if (evaluate(r.coefficients, Rational(q)) != count_lattice_points(p.dilated(q)).count)
      r.consistent = false;
  if (!r.consistent)
    throw PreconditionViolated("lattice point counts are not polynomial of degree n", "ehrhart_inconsistent");
  r.constant_is_one = r.coefficients[0] == 1;
  if (auto vol = independent_volume(p, verts)) {
    r.volume = vol->volume;
    r.boundary_volume = vol->boundary;
    r.leading_is_volume = r.coefficients[static_cast<std::size_t>(n)] == vol->volume;
    r.subleading_is_half_boundary = r.coefficients[static_cast<std::size_t>(n - 1)] == vol->boundary / 2;
  }
  return r;
}

PickReport pick_check(const OrientedLoop& polygon) {
  if (!polygon.all_lattice()) throw InvalidInput("Pick's formula needs lattice vertices");
  Scaled s = scale_points(polygon.vertices());
  if (!is_simple(s.v)) throw InvalidInput("polygon is not simple", "non_simple");
  PickReport r;
  r.area = mp::abs(signed_area(polygon)) / 2;
  LoopGrid grid(polygon);
  grid.for_each_box_point([&](std::int64_t x, std::int64_t y) {
    if (!grid.on_loop(x, y) && grid.winding(x, y) != 0) ++r.interior;
  });
  for (std::size_t i = 0; i < s.v.size(); ++i) r.boundary += lattice_length(s.v[i], s.v[(i + 1) % s.v.size()]);
  r.holds = r.area == Rational(r.interior) + Rational(r.boundary, 2) - 1;
  return r;
}

TurnSum solid_angle_count(const OrientedLoop& loop) {
  TurnSum total;
  const auto on = lattice_points_on(loop);
  LoopGrid grid(loop);
  grid.for_each_box_point([&](std::int64_t x, std::int64_t y) {
    if (on.count({x, y})) return;
    total.turns += grid.winding(x, y);
  });
  for (const auto& [x, y] : on) total += omega_on_loop(loop, {Rational(x), Rational(y)});
  return total;
}

LaurentSum equivariant_index(const MultiPolytope& p, IndexConvention convention) {
  LaurentSum out;
  if (convention == IndexConvention::ClosedConvex) {
    if (!p.fan().is_ordinary() || !fans::is_complete(p.fan()))
      throw PreconditionViolated("closed convex index needs an ordinary complete fan", "not_convex");
    for (auto& u : count_lattice_points(p).points) out.emplace(std::move(u), 1);
    return out;
  }
  auto loops = boundary_loops(p);
  std::vector<LoopGrid> grids;
  for (const auto& l : loops) grids.emplace_back(l);
  std::set<Lattice2> box;
  for (const auto& g : grids) g.for_each_box_point([&](std::int64_t x, std::int64_t y) { box.insert({x, y}); });
  for (auto [x, y] : box) {
    bool boundary = std::any_of(grids.begin(), grids.end(), [&](const LoopGrid& g) { return g.on_loop(x, y); });
    if (boundary) continue;
    std::int64_t m = 0;
    for (const auto& g : grids) m += g.winding(x, y);
    if (m != 0) out.emplace(IntVec{x, y}, m);
  }
  return out;
}

std::vector<Lattice2> convex_hull(std::vector<Lattice2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Lattice2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

TwelveReport dual_polygon_twelve(const std::vector<Lattice2>& points) {
  auto hull = convex_hull(points);
  if (hull.size() < 3) throw PreconditionViolated("polygon is degenerate", "not_reflexive");
  OrientedLoop loop = OrientedLoop::from_lattice(hull);
  LoopGrid grid(loop);
  std::vector<Lattice2> interior;
  grid.for_each_box_point([&](std::int64_t x, std::int64_t y) {
    if (!grid.on_loop(x, y) && grid.winding(x, y) != 0) interior.push_back({x, y});
  });
  if (interior.size() != 1)
    throw PreconditionViolated("polygon has " + std::to_string(interior.size()) + " interior lattice points",
                               "wrong_interior_count");
  for (auto& v : hull) {
    v[0] -= interior[0][0];
    v[1] -= interior[0][1];
  }
  TwelveReport r;
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % k];
    r.boundary += lattice_length(a, b);
    IntMatrix m = IntMatrix::from_rows({{a[0], a[1]}, {b[0], b[1]}}, 2);
    auto sol = solve(m, {Rational(-1), Rational(-1)});
    if (!sol || !is_integral((*sol)[0]) || !is_integral((*sol)[1]))
      throw PreconditionViolated("dual polygon has a non-integral vertex", "not_reflexive");
    r.dual_vertices.push_back({to_int64(num_of((*sol)[0])), to_int64(num_of((*sol)[1]))});
  }
  for (std::size_t i = 0; i < k; ++i) r.dual_boundary += lattice_length(r.dual_vertices[i], r.dual_vertices[(i + 1) % k]);
  r.sum = r.boundary + r.dual_boundary;
  if (r.sum != 12) throw std::logic_error("boundary counts of a reflexive pair do not sum to 12");
  return r;
}

PickConstantReport pick_constant(const MultiPolytope& p) {
  PickConstantReport r;
  auto loops = boundary_loops(p);
  r.weighted_area = 0;
  for (const auto& l : loops) r.weighted_area += signed_area(l) / 2;
  for (auto& [u, c] : equivariant_index(p, IndexConvention::OpenInterior)) r.interior_weighted += c;
  for (const auto& l : loops)
    for (const auto& [x, y] : lattice_points_on(l))
      r.boundary_passes += static_cast<std::int64_t>(passes_through(l, {Rational(x), Rational(y)}).size());
  r.constant = Rational(r.interior_weighted) + Rational(r.boundary_passes, 2) - r.weighted_area;
  try {
    r.todd_genus = fans::todd_genus(p.fan());
  } catch (const Error&) {
    r.todd_genus.reset();
  }
  return r;
}

}  // namespace torictop::lattice
