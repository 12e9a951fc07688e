#include "torictop/combinatorics.hpp"

#include "torictop/error.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <functional>
#include <map>

namespace torictop::combinatorics {

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : f) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

Face normalized(Face f, int m) {
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw InvalidInput("face has a repeated vertex");
  for (int v : f)
    if (v < 1 || v > m)
      throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
  return f;
}

void check_vertices(int m, const std::unordered_set<Face, FaceHash>& index, bool allow_ghosts) {
  if (allow_ghosts) return;
  for (int v = 1; v <= m; ++v)
    if (!index.count(Face{v}))
      throw InvalidInput("vertex " + std::to_string(v) + " is not a face (ghost vertex)");
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<Face> faces) : m_(m) {
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  faces_ = std::move(faces);
  index_.insert(faces_.begin(), faces_.end());
}

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<Face> facets, Options opts) {
  if (m < 1) throw InvalidInput("vertex count must be positive");
  std::unordered_set<Face, FaceHash> seen;
  seen.insert(Face{});
  for (auto& raw : facets) {
    Face f = normalized(std::move(raw), m);
    if (f.size() > 30) throw InvalidInput("facet too large to close downward");
    if (seen.count(f)) continue;
    const std::uint32_t full = f.size() == 32 ? ~0u : ((1u << f.size()) - 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      Face sub;
      for (std::size_t b = 0; b < f.size(); ++b)
        if (mask & (1u << b)) sub.push_back(f[b]);
      seen.insert(std::move(sub));
      if (mask == full) break;
    }
  }
  check_vertices(m, seen, opts.allow_ghost_vertices);
  return SimplicialComplex(m, std::vector<Face>(seen.begin(), seen.end()));
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<Face> faces, Options opts) {
  if (m < 1) throw InvalidInput("vertex count must be positive");
  std::unordered_set<Face, FaceHash> index;
  index.insert(Face{});
  for (auto& raw : faces) index.insert(normalized(std::move(raw), m));
  for (const auto& f : index)
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!index.count(sub)) throw InvalidInput("face set is not closed under subsets");
    }
  check_vertices(m, index, opts.allow_ghost_vertices);
  return SimplicialComplex(m, std::vector<Face>(index.begin(), index.end()));
}

int SimplicialComplex::dimension() const {
  return static_cast<int>(faces_.back().size()) - 1;
}

std::vector<Face> SimplicialComplex::faces_of_size(std::size_t k) const {
  std::vector<Face> out;
  for (const auto& f : faces_)
    if (f.size() == k) out.push_back(f);
  return out;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool maximal = true;
    for (int v = 1; v <= m_ && maximal; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (contains(g)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

FVector f_vector(const SimplicialComplex& k) {
  FVector f;
  f.entries.assign(static_cast<std::size_t>(k.dimension() + 1), 0);
  for (const auto& face : k.faces())
    if (!face.empty()) ++f.entries[face.size() - 1];
  return f;
}

HVector h_from_f(const FVector& f) {
  const long n = static_cast<long>(f.n());
  HVector h;
  h.entries.resize(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) {
    Integer acc = 0;
    for (long i = 0; i <= k; ++i) {
      Integer fi = i == 0 ? Integer(1) : Integer(f.entries[static_cast<std::size_t>(i - 1)]);
      Integer term = binomial(n - i, k - i) * fi;
      acc += ((k - i) % 2 == 0) ? term : Integer(-term);
    }
    h.entries[static_cast<std::size_t>(k)] = to_int64(acc);
  }
  return h;
}

FVector f_from_h(const HVector& h) {
  const long n = static_cast<long>(h.n());
  FVector f;
  f.entries.resize(static_cast<std::size_t>(n));
  for (long k = 1; k <= n; ++k) {
    Integer acc = 0;
    for (long i = 0; i <= k; ++i) acc += binomial(n - i, k - i) * h.entries[static_cast<std::size_t>(i)];
    f.entries[static_cast<std::size_t>(k - 1)] = to_int64(acc);
  }
  return f;
}

bool euler_relation_check(const FVector& f) {
  const std::size_t n = f.n();
  Integer alt = 0;
  for (std::size_t i = 0; i < n; ++i) alt += (i % 2 == 0) ? Integer(f.entries[i]) : Integer(-f.entries[i]);
  const long expected = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
  return n > 0 && alt == expected;
}

std::vector<std::int64_t> binomial_decomposition(std::int64_t a, int i) {
  if (a < 0) throw InvalidInput("binomial decomposition of a negative number");
  if (i < 1) throw InvalidInput("binomial decomposition needs i >= 1");
  std::vector<std::int64_t> out;
  Integer rest = a;
  for (int k = i; k >= 1 && rest > 0; --k) {
    // Largest x with C(x, k) <= rest; x >= k because C(k, k) = 1 <= rest.
    long lo = k, step = 1;
    while (binomial(lo + step, k) <= rest) {
      lo += step;
      step *= 2;
    }
    long hi = lo + step;  // C(lo, k) <= rest < C(hi, k)
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      (binomial(mid, k) <= rest ? lo : hi) = mid;
    }
    const long x = lo;
    out.push_back(x);
    rest -= binomial(x, k);
  }
  return out;
}

std::int64_t pseudopower(std::int64_t a, int i) {
  auto parts = binomial_decomposition(a, i);
  Integer acc = 0;
  int k = i;
  for (auto ak : parts) {
    acc += binomial(static_cast<long>(ak) + 1, k + 1);
    --k;
  }
  return to_int64(acc);
}

namespace {
void require_h0_one(const HVector& h) {
  if (h.entries.empty() || h.entries[0] != 1) throw InvalidInput("h-vector must start with h_0 = 1");
}

bool symmetric(const std::vector<std::int64_t>& h) {
  const std::size_t n = h.size() - 1;
  for (std::size_t i = 0; i <= n; ++i)
    if (h[i] != h[n - i]) return false;
  return true;
}
}  // namespace

GConditions check_g_conditions(const HVector& h) {
  require_h0_one(h);
  const auto& e = h.entries;
  const std::size_t n = h.n();
  const std::size_t half = n / 2;
  GConditions r;
  r.ds = symmetric(e);
  r.monotone = true;
  for (std::size_t i = 0; i < half; ++i)
    if (e[i] > e[i + 1]) r.monotone = false;
  r.pseudopower = true;
  for (std::size_t i = 1; i + 1 <= half; ++i) {
    const std::int64_t gi = e[i] - e[i - 1];
    const std::int64_t gnext = e[i + 1] - e[i];
    // a^<i> is only defined for a >= 0; a negative g_i fails the condition.
    if (gi < 0 || gnext > pseudopower(gi, static_cast<int>(i))) r.pseudopower = false;
  }
  r.vertex_bound = n == 0 || e[1] >= 1;
  return r;
}

CellSphereConditions check_cell_sphere(const HVector& h) {
  require_h0_one(h);
  const auto& e = h.entries;
  const std::size_t n = h.n();
  CellSphereConditions r;
  r.symmetric = symmetric(e);
  r.nonnegative = true;
  bool some_zero = false;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    if (e[i] < 0) r.nonnegative = false;
    if (e[i] == 0) some_zero = true;
  }
  r.parity = !(n % 2 == 0 && some_zero) || (e[n / 2] % 2 == 0);
  return r;
}

bool check_generalized_ds(const HVector& h, std::int64_t chi_n) {
  const long n = static_cast<long>(h.n());
  if (h.entries.empty()) throw InvalidInput("empty h-vector");
  const Integer chi_sphere = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
  for (long i = 1; i <= n; ++i) {
    Integer lhs = Integer(h.entries[static_cast<std::size_t>(n - i)]) - h.entries[static_cast<std::size_t>(i)];
    Integer rhs = (Integer(chi_n) - chi_sphere) * binomial(n, i);
    if (i % 2 == 1) rhs = -rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {
std::vector<Face> all_subsets_up_to(int m, int k) {
  std::vector<Face> out;
  Face cur;
  std::function<void(int)> rec = [&](int next) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (int v = next; v <= m; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}
}  // namespace

SimplicialComplex boundary_of_simplex(int n) {
  if (n < 1) throw InvalidInput("boundary_of_simplex needs n >= 1");
  return SimplicialComplex::from_faces(n + 1, all_subsets_up_to(n + 1, n));
}

SimplicialComplex skeleton(int m, int k) {
  if (m < 1 || k < 1 || k > m) throw InvalidInput("skeleton needs 1 <= k <= m");
  return SimplicialComplex::from_faces(m, all_subsets_up_to(m, k));
}

SimplicialComplex join_of_s0(int n) {
  if (n < 1) throw InvalidInput("join_of_s0 needs n >= 1");
  std::vector<Face> facets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Face f;
    for (int i = 1; i <= n; ++i) f.push_back((mask >> (i - 1)) & 1u ? i + n : i);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(2 * n, std::move(facets));
}

SimplicialComplex disjoint_points(int m) {
  if (m < 1) throw InvalidInput("disjoint_points needs m >= 1");
  return SimplicialComplex::from_faces(m, all_subsets_up_to(m, 1));
}

SimplicialComplex simplex(int m) {
  if (m < 1) throw InvalidInput("simplex needs m >= 1");
  return SimplicialComplex::from_faces(m, all_subsets_up_to(m, m));
}

SimplicialComplex standard_complex(std::string_view kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InvalidInput(std::string(kind) + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (kind == "boundary_of_simplex") { need(1); return boundary_of_simplex(params[0]); }
  if (kind == "skeleton") { need(2); return skeleton(params[0], params[1]); }
  if (kind == "join_of_s0") { need(1); return join_of_s0(params[0]); }
  if (kind == "disjoint_points") { need(1); return disjoint_points(params[0]); }
  if (kind == "simplex") { need(1); return simplex(params[0]); }
  throw InvalidInput("unknown complex kind '" + std::string(kind) + "'");
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& k) {
  // Every minimal non-face S satisfies S \ {v} in K, so S = F + v for a face F.
  std::unordered_set<Face, FaceHash> found;
  for (const auto& f : k.faces()) {
    for (int v = 1; v <= k.vertex_count(); ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face s = f;
      s.insert(std::upper_bound(s.begin(), s.end(), v), v);
      if (k.contains(s) || found.count(s)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
        Face sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = k.contains(sub);
      }
      if (minimal) found.insert(std::move(s));
    }
  }
  std::vector<Face> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

// ---------------------------------------------------------------------------

SimplicialPoset::SimplicialPoset(std::vector<Element> elements,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw InvalidInput("poset has no elements");
  std::vector<std::vector<std::size_t>> up(n);
  for (auto [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw InvalidInput("poset relation refers to a missing element");
    if (elements_[lo].rank >= elements_[hi].rank)
      throw InvalidInput("rank must strictly increase along the order (" + elements_[lo].name +
                         " < " + elements_[hi].name + ")");
    up[lo].push_back(hi);
  }
  lt_.assign(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(up[s].begin(), up[s].end());
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (lt_[s][x]) continue;
      lt_[s][x] = 1;
      for (auto y : up[x]) stack.push_back(y);
    }
  }
  std::size_t bottoms = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (elements_[i].rank == 0) {
      bottom_ = i;
      ++bottoms;
    }
  if (bottoms != 1) throw InvalidInput("poset needs exactly one element of rank 0");
  for (std::size_t i = 0; i < n; ++i)
    if (i != bottom_ && !lt_[bottom_][i])
      throw InvalidInput("element " + elements_[i].name + " is not above the bottom");

  // Lower intervals must be Boolean: G -> (atoms below G) is an order
  // isomorphism [bottom, F] -> subsets of atoms(F).
  for (std::size_t f = 0; f < n; ++f) {
    const int r = elements_[f].rank;
    if (r > 30) throw InvalidInput("element rank too large");
    std::vector<std::size_t> atoms;
    for (std::size_t a = 0; a < n; ++a)
      if (elements_[a].rank == 1 && less_equal(a, f)) atoms.push_back(a);
    if (static_cast<int>(atoms.size()) != r)
      throw InvalidInput("interval below " + elements_[f].name + " is not Boolean");
    std::map<std::uint32_t, std::size_t> by_mask;
    for (std::size_t g = 0; g < n; ++g) {
      if (!less_equal(g, f)) continue;
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < atoms.size(); ++j)
        if (less_equal(atoms[j], g)) mask |= 1u << j;
      if (std::popcount(mask) != elements_[g].rank || !by_mask.emplace(mask, g).second)
        throw InvalidInput("interval below " + elements_[f].name + " is not Boolean");
    }
    if (by_mask.size() != (std::size_t{1} << r))
      throw InvalidInput("interval below " + elements_[f].name + " is not Boolean");
    for (auto [ma, ga] : by_mask)
      for (auto [mb, gb] : by_mask) {
        const bool subset = (ma & mb) == ma;
        if (subset != less_equal(ga, gb))
          throw InvalidInput("interval below " + elements_[f].name + " is not Boolean");
      }
  }
}

SimplicialPoset SimplicialPoset::face_poset(const SimplicialComplex& k) {
  const auto& faces = k.faces();
  std::vector<Element> elements;
  for (const auto& f : faces) {
    std::string name = "{";
    for (std::size_t i = 0; i < f.size(); ++i) name += (i ? "," : "") + std::to_string(f[i]);
    elements.push_back({name + "}", static_cast<int>(f.size())});
  }
  std::unordered_map<Face, std::size_t, FaceHash> where;
  for (std::size_t i = 0; i < faces.size(); ++i) where.emplace(faces[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t drop = 0; drop < faces[i].size(); ++drop) {
      Face sub = faces[i];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      covers.emplace_back(where.at(sub), i);
    }
  return SimplicialPoset(std::move(elements), covers);
}

std::vector<std::size_t> SimplicialPoset::minimal_upper_bounds(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> common;
  for (std::size_t x = 0; x < size(); ++x)
    if (less_equal(a, x) && less_equal(b, x)) common.push_back(x);
  std::vector<std::size_t> out;
  for (auto x : common) {
    bool minimal = std::none_of(common.begin(), common.end(), [&](std::size_t y) { return less(y, x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> SimplicialPoset::maximal_lower_bounds(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> common;
  for (std::size_t x = 0; x < size(); ++x)
    if (less_equal(x, a) && less_equal(x, b)) common.push_back(x);
  std::vector<std::size_t> out;
  for (auto x : common) {
    bool maximal = std::none_of(common.begin(), common.end(), [&](std::size_t y) { return less(x, y); });
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace torictop::combinatorics
