#include "torictop/fans.hpp"

#include "torictop/error.hpp"

#include <algorithm>
#include <random>

namespace torictop::fans {

namespace {

IntMatrix columns(std::span<const IntVec> rays, std::size_t n) {
  return IntMatrix::from_columns(std::vector<IntVec>(rays.begin(), rays.end()), n);
}

std::string face_text(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

}  // namespace

MultiFan::MultiFan(int n, std::vector<IntVec> rays, SimplicialComplex complex,
                   std::map<Face, Weight> weights)
    : n_(n), rays_(std::move(rays)), complex_(std::move(complex)) {
  if (n_ < 1) throw InvalidInput("lattice rank must be positive");
  if (rays_.size() != static_cast<std::size_t>(complex_.vertex_count()))
    throw InvalidInput("need exactly one ray per vertex of the complex");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != static_cast<std::size_t>(n_))
      throw InvalidInput("ray " + std::to_string(i + 1) + " has wrong length");
    if (!is_primitive(rays_[i]))
      throw InvalidInput("ray " + std::to_string(i + 1) + " is zero or not primitive");
  }
  if (complex_.dimension() != n_ - 1)
    throw InvalidInput("complex must have dimension n - 1 = " + std::to_string(n_ - 1));
  for (const auto& facet : complex_.facets())
    if (rank(columns(cone_rays(facet), static_cast<std::size_t>(n_))) != facet.size())
      throw InvalidInput("rays of face " + face_text(facet) + " are linearly dependent");
  top_ = complex_.faces_of_size(static_cast<std::size_t>(n_));
  for (auto& [face, w] : weights) {
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (!std::binary_search(top_.begin(), top_.end(), sorted, combinatorics::face_less))
      throw InvalidInput("weight given on " + face_text(face) + ", which is not a top face");
    if (w.plus < 0 || w.minus < 0) throw InvalidInput("weights must be nonnegative");
    weights_[sorted] = w;
  }
  for (const auto& t : top_) weights_.try_emplace(t, Weight{});
}

Weight MultiFan::weight(const Face& top) const {
  auto it = weights_.find(top);
  if (it == weights_.end()) throw InvalidInput("not a top face: " + face_text(top));
  return it->second;
}

std::vector<IntVec> MultiFan::cone_rays(const Face& face) const {
  std::vector<IntVec> out;
  for (int v : face) out.push_back(ray(v));
  return out;
}

bool MultiFan::is_ordinary() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const auto& kv) { return kv.second == Weight{}; });
}

bool is_nonsingular(const MultiFan& mf) {
  for (const auto& facet : mf.complex().facets()) {
    IntMatrix m = columns(mf.cone_rays(facet), static_cast<std::size_t>(mf.dimension()));
    if (facet.size() == static_cast<std::size_t>(mf.dimension())) {
      Integer d = determinant(m);
      if (d != 1 && d != -1) return false;
    } else {
      // gcd of maximal minors = product of the invariant factors
      for (const auto& d : smith_invariants(m))
        if (d != 1) return false;
    }
  }
  return true;
}

FanReport validate(const MultiFan& mf) {
  FanReport r;
  r.simplicial = true;  // enforced at construction
  r.nonsingular = is_nonsingular(mf);
  r.complete = is_complete(mf);
  r.euler = static_cast<std::int64_t>(mf.top_faces().size());
  return r;
}

ConePosition cone_contains(std::span<const IntVec> rays, const IntVec& v) {
  const std::size_t n = v.size();
  for (const auto& r : rays)
    if (r.size() != n) throw InvalidInput("cone ray and point have different lengths");
  std::vector<Rational> rhs(v.begin(), v.end());
  auto sol = solve(columns(rays, n), rhs);
  if (!sol) return ConePosition::Outside;
  bool some_zero = false;
  for (const auto& c : *sol) {
    if (c < 0) return ConePosition::Outside;
    if (c == 0) some_zero = true;
  }
  return some_zero ? ConePosition::Boundary : ConePosition::Interior;
}

bool is_generic(const MultiFan& mf, const IntVec& v) {
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return false;
  for (const auto& ridge : mf.complex().faces_of_size(static_cast<std::size_t>(mf.dimension() - 1))) {
    auto rays = mf.cone_rays(ridge);
    if (cone_contains(rays, v) != ConePosition::Outside) return false;
  }
  return true;
}

std::int64_t degree_at(const MultiFan& mf, const IntVec& v) {
  if (v.size() != static_cast<std::size_t>(mf.dimension()))
    throw InvalidInput("test vector has wrong length");
  if (!is_generic(mf, v))
    throw GenericityViolation("vector lies on an (n-1)-dimensional cone; perturb it");
  std::int64_t total = 0;
  for (const auto& top : mf.top_faces()) {
    auto rays = mf.cone_rays(top);
    if (cone_contains(rays, v) == ConePosition::Interior) total += mf.weight(top).value();
  }
  return total;
}

std::vector<IntVec> generic_battery(const MultiFan& mf) {
  constexpr std::uint64_t kSeed = 0x746f726963746f70ULL;
  constexpr int kCount = 64;
  std::mt19937_64 rng(kSeed);
  const auto n = static_cast<std::size_t>(mf.dimension());
  std::vector<IntVec> out;
  out.reserve(kCount);
  for (int t = 0; t < kCount; ++t) {
    IntVec v(n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 2001) - 1000;
    for (std::int64_t k = 1; !is_generic(mf, v); ++k) {
      if (k > 10000) throw InvalidInput("could not perturb a test vector off the walls");
      std::int64_t step = 1;
      for (auto& x : v) {
        x += step;
        step = checked_mul(step, k + 1);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::int64_t todd_genus(const MultiFan& mf) {
  auto battery = generic_battery(mf);
  const std::int64_t first = degree_at(mf, battery.front());
  for (const auto& v : battery)
    if (degree_at(mf, v) != first)
      throw NotComplete("degree is not constant over the test battery");
  return first;
}

namespace {
bool ridges_paired(const MultiFan& mf) {
  const auto n = static_cast<std::size_t>(mf.dimension());
  for (const auto& ridge : mf.complex().faces_of_size(n - 1)) {
    std::int64_t count = 0;
    for (const auto& top : mf.top_faces())
      if (std::includes(top.begin(), top.end(), ridge.begin(), ridge.end())) {
        auto w = mf.weight(top);
        count += w.plus + w.minus;
      }
    if (count != 2) return false;
  }
  return true;
}
}  // namespace

bool is_complete(const MultiFan& mf) {
  if (!ridges_paired(mf)) return false;
  std::int64_t degree;
  try {
    degree = todd_genus(mf);
  } catch (const NotComplete&) {
    return false;
  }
  return !mf.is_ordinary() || degree == 1;
}

MultiFan cp_fan(int n) {
  if (n < 1) throw InvalidInput("cp(n) needs n >= 1");
  std::vector<IntVec> rays;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVec(static_cast<std::size_t>(n), -1));
  return MultiFan(n, std::move(rays), combinatorics::boundary_of_simplex(n));
}

MultiFan hirzebruch_fan(std::int64_t a) {
  std::vector<IntVec> rays{{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  return MultiFan(2, std::move(rays), combinatorics::join_of_s0(2));
}

MultiFan bott_fan(const std::vector<IntVec>& twists) {
  const std::size_t n = twists.size();
  if (n < 1) throw InvalidInput("bott tower needs at least one stage");
  for (std::size_t j = 0; j < n; ++j) {
    if (twists[j].size() != n) throw InvalidInput("bott twist matrix must be square");
    for (std::size_t k = j; k < n; ++k)
      if (twists[j][k] != 0) throw InvalidInput("bott twist matrix must be strictly lower triangular");
  }
  std::vector<IntVec> rays(2 * n, IntVec(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    rays[k][k] = 1;
    rays[n + k][k] = -1;
    for (std::size_t j = k + 1; j < n; ++j) rays[n + k][j] = twists[j][k];
  }
  MultiFan fan(static_cast<int>(n), std::move(rays), combinatorics::join_of_s0(static_cast<int>(n)));
  if (!is_nonsingular(fan)) throw InvalidInput("bott fan is singular");
  return fan;
}

MultiFan s2n_fan(int n) {
  if (n < 1) throw InvalidInput("s2n(n) needs n >= 1");
  std::vector<IntVec> rays;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back(e);
  }
  Face all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  std::map<Face, Weight> w{{all, Weight{1, 1}}};
  return MultiFan(n, std::move(rays), combinatorics::simplex(n), std::move(w));
}

MultiFan winding2_demo() {
  // v1 = v4; the first three cones sweep 360 degrees, the last four another 360.
  std::vector<IntVec> rays{{1, 0}, {0, 1}, {-1, -1}, {1, 0}, {1, 1}, {-1, 0}, {0, -1}};
  std::vector<Face> edges;
  for (int i = 1; i <= 7; ++i) edges.push_back(Face{i, i % 7 + 1});
  MultiFan fan(2, std::move(rays), SimplicialComplex::from_facets(7, std::move(edges)));
  for (int i = 0; i < 7; ++i) {
    const auto& a = fan.rays()[static_cast<std::size_t>(i)];
    const auto& b = fan.rays()[static_cast<std::size_t>((i + 1) % 7)];
    if (a[0] * b[1] - a[1] * b[0] != 1) throw std::logic_error("winding2_demo: cone not unimodular");
  }
  return fan;
}

std::optional<IntMatrix> fans_isomorphic(const MultiFan& a, const MultiFan& b) {
  for (const MultiFan* f : {&a, &b})
    if (!is_nonsingular(*f) || !is_complete(*f))
      throw PreconditionViolated("fans_isomorphic needs complete nonsingular fans");
  if (a.dimension() != b.dimension() || a.ray_count() != b.ray_count() ||
      a.top_faces().size() != b.top_faces().size())
    return std::nullopt;
  const auto n = static_cast<std::size_t>(a.dimension());
  const Face& anchor = a.top_faces().front();
  IntMatrix anchor_inv = unimodular_inverse(columns(a.cone_rays(anchor), n));

  std::map<IntVec, int> b_index;
  for (std::size_t j = 0; j < b.ray_count(); ++j) b_index.emplace(b.rays()[j], static_cast<int>(j + 1));

  for (const auto& target : b.top_faces()) {
    Face order = target;
    do {
      IntMatrix g = columns(b.cone_rays(order), n) * anchor_inv;
      std::vector<int> image(a.ray_count() + 1, 0);
      std::vector<char> used(b.ray_count() + 1, 0);
      bool ok = true;
      for (std::size_t i = 0; i < a.ray_count() && ok; ++i) {
        IntMatrix v = g * columns(std::span<const IntVec>(&a.rays()[i], 1), n);
        IntVec w(n);
        for (std::size_t r = 0; r < n; ++r) w[r] = to_int64(v(r, 0));
        auto it = b_index.find(w);
        if (it == b_index.end() || used[static_cast<std::size_t>(it->second)]) {
          ok = false;
        } else {
          image[i + 1] = it->second;
          used[static_cast<std::size_t>(it->second)] = 1;
        }
      }
      if (ok)
        for (const auto& top : a.top_faces()) {
          Face mapped;
          for (int v : top) mapped.push_back(image[static_cast<std::size_t>(v)]);
          std::sort(mapped.begin(), mapped.end());
          if (!b.complex().contains(mapped)) {
            ok = false;
            break;
          }
        }
      if (ok) return g;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

IntMatrix cox_kernel(const MultiFan& f) {
  const auto n = static_cast<std::size_t>(f.dimension());
  IntMatrix m = columns(f.rays(), n);
  if (rank(m) != n) throw PreconditionViolated("rays do not span Q^n");
  return integer_kernel(m);
}

}  // namespace torictop::fans
