#pragma once

#include "torictop/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace torictop::combinatorics {

/// A face is a sorted list of 1-based vertex labels; {} is the empty face.
using Face = std::vector<int>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Orders faces by cardinality, then lexicographically.
bool face_less(const Face& a, const Face& b);

/// Abstract simplicial complex on the vertex set {1..m}. Immutable once built.
class SimplicialComplex {
 public:
  struct Options {
    /// Permit vertices i with {i} not a face (needed e.g. for K = {∅}).
    bool allow_ghost_vertices = false;
  };

  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(int m, std::vector<Face> facets, Options opts);
  static SimplicialComplex from_facets(int m, std::vector<Face> facets) {
    return from_facets(m, std::move(facets), Options{});
  }
  /// Faces must already be closed under subsets; throws InvalidInput otherwise.
  static SimplicialComplex from_faces(int m, std::vector<Face> faces, Options opts);
  static SimplicialComplex from_faces(int m, std::vector<Face> faces) {
    return from_faces(m, std::move(faces), Options{});
  }

  int vertex_count() const { return m_; }
  /// Max face cardinality minus one; -1 for {∅}.
  int dimension() const;
  bool contains(const Face& face) const { return index_.count(face) != 0; }
  /// All faces including ∅, sorted by face_less.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<Face> faces_of_size(std::size_t k) const;
  /// Inclusion-maximal faces, sorted by face_less.
  std::vector<Face> facets() const;

  bool operator==(const SimplicialComplex& other) const {
    return m_ == other.m_ && faces_ == other.faces_;
  }

 private:
  SimplicialComplex(int m, std::vector<Face> faces);

  int m_ = 0;
  std::vector<Face> faces_;
  std::unordered_set<Face, FaceHash> index_;
};

/// (f_0, ..., f_{n-1}); f_i counts faces with i+1 vertices.
struct FVector {
  std::vector<std::int64_t> entries;
  std::size_t n() const { return entries.size(); }
  bool operator==(const FVector&) const = default;
};

/// (h_0, ..., h_n).
struct HVector {
  std::vector<std::int64_t> entries;
  std::size_t n() const { return entries.empty() ? 0 : entries.size() - 1; }
  bool operator==(const HVector&) const = default;
};

FVector f_vector(const SimplicialComplex& k);

/// Reads h off sum_i h_i t^{n-i} = sum_i f_{i-1} (t-1)^{n-i} with f_{-1} = 1.
HVector h_from_f(const FVector& f);
FVector f_from_h(const HVector& h);

/// f_0 - f_1 + ... + (-1)^{n-1} f_{n-1} == 1 + (-1)^{n-1}.
bool euler_relation_check(const FVector& f);

/// Greedy expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) with
/// a_i > a_{i-1} > ... > a_j >= j >= 1. Returns {a_i, a_{i-1}, ..., a_j};
/// empty for a = 0.
std::vector<std::int64_t> binomial_decomposition(std::int64_t a, int i);

/// a^<i>: each C(a_k, k) of the expansion becomes C(a_k + 1, k + 1). 0^<i> = 0.
std::int64_t pseudopower(std::int64_t a, int i);

struct GConditions {
  bool ds = false;           // h_i = h_{n-i}
  bool monotone = false;     // h_0 <= h_1 <= ... <= h_{floor(n/2)}
  bool pseudopower = false;  // g_{i+1} <= g_i^<i>, 1 <= i <= floor(n/2) - 1
  /// Separate polytopality lint f_0 >= n + 1 (equivalently h_1 >= 1); not part of passed().
  bool vertex_bound = false;
  bool passed() const { return ds && monotone && pseudopower; }
};

/// Throws InvalidInput unless h_0 = 1.
GConditions check_g_conditions(const HVector& h);

struct CellSphereConditions {
  bool symmetric = false;    // h_i = h_{n-i}
  bool nonnegative = false;  // h_i >= 0 for 1 <= i <= n-1
  bool parity = false;       // n even and some h_j = 0 => h_{n/2} even
  bool passed() const { return symmetric && nonnegative && parity; }
};

CellSphereConditions check_cell_sphere(const HVector& h);

/// h_{n-i} - h_i == (-1)^i (chi_N - chi(S^{n-1})) C(n, i) for all 1 <= i <= n.
bool check_generalized_ds(const HVector& h, std::int64_t chi_n);

SimplicialComplex boundary_of_simplex(int n);
/// All subsets of {1..m} with at most k elements (the (k-1)-skeleton of the simplex).
SimplicialComplex skeleton(int m, int k);
/// n-fold join of S^0 on {1..2n}; vertices i and i+n are the antipodal pair.
SimplicialComplex join_of_s0(int n);
SimplicialComplex disjoint_points(int m);
/// Full simplex on {1..m}.
SimplicialComplex simplex(int m);

/// Dispatches on "boundary_of_simplex", "skeleton", "join_of_s0",
/// "disjoint_points", "simplex".
SimplicialComplex standard_complex(std::string_view kind, std::span<const int> params);

/// Inclusion-minimal subsets of {1..m} that are not faces, sorted by face_less.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& k);

/// Finite poset with a bottom element whose lower intervals are Boolean.
class SimplicialPoset {
 public:
  struct Element {
    std::string name;
    int rank = 0;
  };

  /// `relations` lists pairs (lower, upper) by element index; the order is
  /// their transitive closure. Throws InvalidInput if the result is not a
  /// simplicial poset.
  SimplicialPoset(std::vector<Element> elements,
                  const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  /// Faces of k ordered by inclusion; names like "{1,2}", bottom "{}".
  static SimplicialPoset face_poset(const SimplicialComplex& k);

  std::size_t size() const { return elements_.size(); }
  std::size_t bottom() const { return bottom_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  bool less(std::size_t a, std::size_t b) const { return lt_[a][b] != 0; }
  bool less_equal(std::size_t a, std::size_t b) const { return a == b || less(a, b); }

  std::vector<std::size_t> minimal_upper_bounds(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> maximal_lower_bounds(std::size_t a, std::size_t b) const;

 private:
  std::vector<Element> elements_;
  std::vector<std::vector<char>> lt_;
  std::size_t bottom_ = 0;
};

}  // namespace torictop::combinatorics
