#include "torictop/arrangement.hpp"

#include "torictop/error.hpp"
#include "torictop/integer_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace torictop::arrangement {

int size_guard(int fallback) {
  if (const char* env = std::getenv("TORICTOP_SIZE_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 30) return static_cast<int>(v);
  }
  return fallback;
}

namespace {

using Mask = std::uint32_t;

Mask to_mask(const Face& f) {
  Mask m = 0;
  for (int v : f) m |= Mask{1} << (v - 1);
  return m;
}

Face from_mask(Mask m) {
  Face f;
  for (int v = 1; m != 0; ++v, m >>= 1)
    if (m & 1U) f.push_back(v);
  return f;
}

void check_guard(const SimplicialComplex& k) {
  const int limit = size_guard(kCellGuard);
  if (k.vertex_count() > limit)
    throw SizeGuardExceeded("m = " + std::to_string(k.vertex_count()) + " exceeds the cell guard " +
                            std::to_string(limit));
}

struct MaskCell {
  Mask sigma;
  Mask tau;
  int dim() const { return 2 * std::popcount(sigma) + std::popcount(tau); }
};

std::vector<MaskCell> mask_cells(const SimplicialComplex& k) {
  check_guard(k);
  const Mask full = k.vertex_count() == 0 ? 0 : (Mask{1} << k.vertex_count()) - 1;
  std::vector<MaskCell> out;
  for (const auto& face : k.faces()) {
    const Mask sigma = to_mask(face);
    const Mask rest = full & ~sigma;
    // Subsets of `rest` in increasing binary order of their compressed index.
    const int free = std::popcount(rest);
    std::vector<int> bits;
    for (int b = 0; b < k.vertex_count(); ++b)
      if (rest & (Mask{1} << b)) bits.push_back(b);
    for (Mask idx = 0; idx < (Mask{1} << free); ++idx) {
      Mask tau = 0;
      for (int t = 0; t < free; ++t)
        if (idx & (Mask{1} << t)) tau |= Mask{1} << bits[static_cast<std::size_t>(t)];
      out.push_back({sigma, tau});
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Nonzero invariant factors of a sparse matrix, one connected block at a time.
std::vector<Integer> sparse_invariants(const BoundaryMap& map) {
  std::vector<Integer> out;
  if (map.entries.empty()) return out;
  UnionFind uf(map.rows + map.cols);
  for (const auto& e : map.entries) uf.unite(e.row, map.rows + e.col);
  std::unordered_map<std::size_t, std::vector<const SparseEntry*>> blocks;
  for (const auto& e : map.entries) blocks[uf.find(e.row)].push_back(&e);
  for (auto& [root, entries] : blocks) {
    std::map<std::size_t, std::size_t> rows, cols;
    for (const auto* e : entries) {
      rows.emplace(e->row, 0);
      cols.emplace(e->col, 0);
    }
    std::size_t i = 0;
    for (auto& [r, idx] : rows) idx = i++;
    i = 0;
    for (auto& [c, idx] : cols) idx = i++;
    IntMatrix dense(rows.size(), cols.size());
    for (const auto* e : entries) dense(rows[e->row], cols[e->col]) += e->value;
    for (auto& d : smith_invariants(std::move(dense))) out.push_back(std::move(d));
  }
  return out;
}

// Rewrites a list of cyclic orders as invariant factors d_1 | d_2 | ...
std::vector<std::int64_t> invariant_form(const std::vector<Integer>& factors) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (const auto& f : factors) {
    std::int64_t x = to_int64(f);
    if (x < 0) x = -x;
    for (std::int64_t p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      std::int64_t q = 1;
      while (x % p == 0) {
        x /= p;
        q *= p;
      }
      by_prime[p].push_back(q);
    }
    if (x > 1) by_prime[x].push_back(x);
  }
  std::size_t len = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end());
    len = std::max(len, powers.size());
  }
  std::vector<std::int64_t> out(len, 1);
  for (const auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) out[len - powers.size() + i] *= powers[i];
  return out;
}

}  // namespace

std::vector<ZkCell> zk_cells(const SimplicialComplex& k) {
  std::vector<ZkCell> out;
  for (const auto& c : mask_cells(k)) out.push_back({from_mask(c.sigma), from_mask(c.tau)});
  return out;
}

bool ChainComplexZ::is_valid() const {
  if (boundaries.size() != ranks.size()) return false;
  for (std::size_t d = 0; d < ranks.size(); ++d) {
    const auto& b = boundaries[d];
    if (b.cols != ranks[d] || b.rows != (d == 0 ? 0 : ranks[d - 1])) return false;
    for (const auto& e : b.entries)
      if (e.row >= b.rows || e.col >= b.cols) return false;
  }
  for (std::size_t d = 2; d < ranks.size(); ++d) {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> lower_by_col(boundaries[d - 1].cols);
    for (const auto& e : boundaries[d - 1].entries) lower_by_col[e.col].push_back({e.row, e.value});
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> product;
    for (const auto& e : boundaries[d].entries)
      for (const auto& [r, v] : lower_by_col[e.row]) product[{r, e.col}] += v * e.value;
    for (const auto& [key, v] : product)
      if (v != 0) return false;
  }
  return true;
}

ChainComplexZ zk_chain_complex(const SimplicialComplex& k) {
  const auto cells = mask_cells(k);
  int top = 0;
  for (const auto& c : cells) top = std::max(top, c.dim());
  ChainComplexZ cx;
  cx.ranks.assign(static_cast<std::size_t>(top + 1), 0);
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto key = [](Mask s, Mask t) { return (std::uint64_t{s} << 32) | t; };
  for (const auto& c : cells) index[key(c.sigma, c.tau)] = cx.ranks[static_cast<std::size_t>(c.dim())]++;
  cx.boundaries.resize(cx.ranks.size());
  for (std::size_t d = 0; d < cx.ranks.size(); ++d) {
    cx.boundaries[d].cols = cx.ranks[d];
    cx.boundaries[d].rows = d == 0 ? 0 : cx.ranks[d - 1];
  }
  for (const auto& c : cells) {
    const auto d = static_cast<std::size_t>(c.dim());
    const std::size_t col = index.at(key(c.sigma, c.tau));
    for (int i = 0; i < k.vertex_count(); ++i) {
      const Mask bit = Mask{1} << i;
      if (!(c.sigma & bit)) continue;
      // Disks are even-dimensional, so only arcs before i contribute to the sign.
      const int arcs_before = std::popcount(c.tau & (bit - 1));
      const std::int64_t sign = arcs_before % 2 == 0 ? 1 : -1;
      const std::size_t row = index.at(key(c.sigma & ~bit, c.tau | bit));
      cx.boundaries[d].entries.push_back({row, col, sign});
    }
  }
  if (!cx.is_valid()) throw std::logic_error("moment-angle boundary does not square to zero");
  return cx;
}

bool HomologyResult::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

HomologyResult homology(const ChainComplexZ& c) {
  if (!c.is_valid()) throw InvalidInput("malformed chain complex");
  const std::size_t top = c.ranks.size();
  std::vector<std::vector<Integer>> factors(top + 1);
  for (std::size_t d = 0; d < top; ++d) factors[d] = sparse_invariants(c.boundaries[d]);
  HomologyResult r;
  for (std::size_t d = 0; d < top; ++d) {
    const auto rank_here = static_cast<std::int64_t>(factors[d].size());
    const auto rank_above = static_cast<std::int64_t>(factors[d + 1].size());
    r.betti.push_back(static_cast<std::int64_t>(c.ranks[d]) - rank_here - rank_above);
    std::vector<Integer> nontrivial;
    for (const auto& f : factors[d + 1])
      if (abs(f) > 1) nontrivial.push_back(f);
    r.torsion.push_back(invariant_form(nontrivial));
  }
  return r;
}

cohomology::GradedDims uk_wedge_prediction(int m, int k) {
  if (m < 2 || k < 1 || k > m - 1) throw InvalidInput("need 1 <= k <= m-1");
  cohomology::GradedDims g;
  g.dims.assign(static_cast<std::size_t>(m + k + 1), 0);
  for (int j = k + 1; j <= m; ++j)
    g.dims[static_cast<std::size_t>(k + j)] += binomial64(m, j) * binomial64(j - 1, k);
  return g;
}

WedgeReport verify_wedge(int m, int k) {
  const int limit = size_guard(kWedgeGuard);
  if (m > limit)
    throw SizeGuardExceeded("m = " + std::to_string(m) + " exceeds the wedge guard " + std::to_string(limit));
  WedgeReport r;
  r.predicted_reduced = uk_wedge_prediction(m, k).dims;
  const auto h = homology(zk_chain_complex(combinatorics::skeleton(m, k)));
  r.torsion_free = h.torsion_free();
  r.betti = h.betti;
  while (!r.betti.empty() && r.betti.back() == 0) r.betti.pop_back();
  auto reduced = r.betti;
  if (!reduced.empty()) reduced[0] -= 1;
  auto predicted = r.predicted_reduced;
  while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
  while (!predicted.empty() && predicted.back() == 0) predicted.pop_back();
  r.match = reduced == predicted;
  return r;
}

}  // namespace torictop::arrangement
