#pragma once

#include "torictop/combinatorics.hpp"
#include "torictop/exact.hpp"
#include "torictop/integer_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace torictop::fans {

using combinatorics::Face;
using combinatorics::SimplicialComplex;

/// Signed point count carried by a top-dimensional cone.
struct Weight {
  std::int64_t plus = 1;
  std::int64_t minus = 0;
  std::int64_t value() const { return plus - minus; }
  bool operator==(const Weight&) const = default;
};

/// Simplicial complex on {1..m} with a primitive ray in Z^n per vertex and a
/// weight per top face. Ordinary fans are the case where every weight is (1, 0).
class MultiFan {
 public:
  /// Throws InvalidInput if a ray is zero or not primitive, if the rays of a
  /// face are dependent, if dim K != n - 1, or if a weight sits on a non-top face.
  MultiFan(int n, std::vector<IntVec> rays, SimplicialComplex complex,
           std::map<Face, Weight> weights = {});

  int dimension() const { return n_; }
  std::size_t ray_count() const { return rays_.size(); }
  /// Rays indexed by vertex label - 1.
  const std::vector<IntVec>& rays() const { return rays_; }
  const IntVec& ray(int vertex) const { return rays_.at(static_cast<std::size_t>(vertex - 1)); }
  const SimplicialComplex& complex() const { return complex_; }
  /// Faces with n vertices, sorted.
  const std::vector<Face>& top_faces() const { return top_; }
  Weight weight(const Face& top) const;
  /// Weights as stored (top faces only), including defaults.
  const std::map<Face, Weight>& weights() const { return weights_; }
  std::vector<IntVec> cone_rays(const Face& face) const;
  bool is_ordinary() const;

 private:
  int n_;
  std::vector<IntVec> rays_;
  SimplicialComplex complex_;
  std::vector<Face> top_;
  std::map<Face, Weight> weights_;
};

struct FanReport {
  bool simplicial = false;
  bool nonsingular = false;
  bool complete = false;
  std::int64_t euler = 0;  // number of top-dimensional faces
};

FanReport validate(const MultiFan& mf);

/// Every cone of the complex has generators extending to a Z-basis.
bool is_nonsingular(const MultiFan& mf);

enum class ConePosition { Interior, Boundary, Outside };

/// Position of v relative to the cone spanned by independent rays, decided by
/// an exact rational solve of v = sum r_i ray_i.
ConePosition cone_contains(std::span<const IntVec> rays, const IntVec& v);

/// Sum of w(I) over top faces I whose cone contains v in its interior. Throws
/// GenericityViolation if v lies in some (n-1)-dimensional cone.
std::int64_t degree_at(const MultiFan& mf, const IntVec& v);

/// True if v is nonzero and lies on no (n-1)-dimensional cone.
bool is_generic(const MultiFan& mf, const IntVec& v);

/// 64 deterministic test vectors with coordinates drawn from [-1000, 1000]
/// (fixed-seed mt19937_64), each nudged until generic for mf.
std::vector<IntVec> generic_battery(const MultiFan& mf);

/// Common degree over the battery; throws NotComplete if the degrees differ.
std::int64_t todd_genus(const MultiFan& mf);

/// Every ridge lies in exactly two top faces counted with multiplicity
/// w+ + w-, and the degree is constant on the battery (and equal to 1 for
/// ordinary fans).
bool is_complete(const MultiFan& mf);

// Standard constructors.
MultiFan cp_fan(int n);
MultiFan hirzebruch_fan(std::int64_t a);
/// twists is n x n with c_{jk} (j > k) below the diagonal; vertex k carries
/// x_k = e_k and vertex n + k carries y_k = -e_k + sum_{j>k} c_{jk} e_j.
MultiFan bott_fan(const std::vector<IntVec>& twists);
MultiFan s2n_fan(int n);
/// Seven planar rays whose consecutive unimodular cones wrap twice around the origin.
MultiFan winding2_demo();

/// A g in GL(n, Z) carrying the rays of a onto the rays of b and inducing an
/// isomorphism of complexes, or nullopt. The search fixes the first top cone
/// of a and walks the top cones of b in sorted order, each with its generator
/// orderings in lexicographic order; the first hit is returned. Both fans
/// must be complete and nonsingular (PreconditionViolated otherwise).
std::optional<IntMatrix> fans_isomorphic(const MultiFan& a, const MultiFan& b);

/// Hermite-normal-form basis (one vector per row) of the integer kernel of
/// the n x m matrix whose columns are the rays. Throws PreconditionViolated
/// when the rays do not span Q^n.
IntMatrix cox_kernel(const MultiFan& f);

}  // namespace torictop::fans
