#pragma once

#include "torictop/cohomology.hpp"
#include "torictop/combinatorics.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace torictop::arrangement {

using combinatorics::Face;
using combinatorics::SimplicialComplex;

/// Product cell of Z_K: the open 2-disk on sigma, the open arc of the circle
/// on tau, the base point everywhere else.
struct ZkCell {
  Face sigma;
  Face tau;
  int dimension() const { return static_cast<int>(2 * sigma.size() + tau.size()); }
  bool operator==(const ZkCell&) const = default;
};

/// Default guard for cell enumeration, and the tighter one for verify_wedge.
inline constexpr int kCellGuard = 10;
inline constexpr int kWedgeGuard = 8;

/// The guard in effect: TORICTOP_SIZE_GUARD if set to a positive integer
/// (may exhaust memory), otherwise `fallback`.
int size_guard(int fallback);

/// Cells ordered by sigma (face order of K), then tau as a binary subset index.
std::vector<ZkCell> zk_cells(const SimplicialComplex& k);

struct SparseEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;
};

/// d: C_d -> C_{d-1}; rows index C_{d-1}, columns index C_d.
struct BoundaryMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;
};

struct ChainComplexZ {
  /// rank C_d for d = 0..top.
  std::vector<std::size_t> ranks;
  /// boundaries[d] is d_d; boundaries[0] is the zero map to nothing.
  std::vector<BoundaryMap> boundaries;

  /// Shapes agree and every composite d_{d-1} d_d vanishes.
  bool is_valid() const;
};

ChainComplexZ zk_chain_complex(const SimplicialComplex& k);

struct HomologyResult {
  std::vector<std::int64_t> betti;
  /// Invariant factors > 1 per degree, in divisibility order.
  std::vector<std::vector<std::int64_t>> torsion;
  bool torsion_free() const;
};

/// Throws InvalidInput if the complex is malformed.
HomologyResult homology(const ChainComplexZ& c);

/// Reduced Betti numbers of U(K) for K the (k-1)-skeleton of the simplex on
/// m vertices; dims has length m + k + 1.
cohomology::GradedDims uk_wedge_prediction(int m, int k);

struct WedgeReport {
  bool match = false;
  bool torsion_free = false;
  /// Unreduced, trailing zeros trimmed.
  std::vector<std::int64_t> betti;
  std::vector<std::int64_t> predicted_reduced;
};

WedgeReport verify_wedge(int m, int k);

}  // namespace torictop::arrangement
