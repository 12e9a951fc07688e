#pragma once

#include "torictop/combinatorics.hpp"
#include "torictop/fans.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace torictop::cohomology {

using combinatorics::SimplicialComplex;
using combinatorics::SimplicialPoset;
using fans::MultiFan;

struct Generator {
  std::string name;
  int degree = 2;
  bool operator==(const Generator&) const = default;
};

/// (generator index, exponent) pairs sorted by index.
using Monomial = std::vector<std::pair<std::size_t, int>>;

struct Term {
  std::int64_t coef = 1;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

using Polynomial = std::vector<Term>;

/// Graded generators and integer relations. Relations are kept exactly as
/// emitted; nothing is normalized.
struct RingPresentation {
  std::vector<Generator> generators;
  std::vector<Polynomial> relations;

  /// Throws InvalidInput if names repeat, a degree is odd, or a relation is
  /// not homogeneous.
  void check() const;
  /// e.g. "Z[tau_1, tau_2]/(tau_1*tau_2)"
  std::string to_text() const;
};

/// Dimensions in degrees 0, 2, 4, ...
struct GradedDims {
  std::vector<std::int64_t> dims;
  bool operator==(const GradedDims&) const = default;
};

/// tau_1..tau_m in degree 2, one squarefree monomial per minimal non-face.
RingPresentation face_ring_presentation(const SimplicialComplex& k);

/// mu_1..mu_m with the face-ring relations plus sum_i (v_i)_j mu_i for each
/// coordinate j. Requires a complete nonsingular fan.
RingPresentation dj_presentation(const MultiFan& f);

/// b_{2i} = h_i of the underlying complex. Requires a complete fan.
GradedDims betti_numbers(const MultiFan& f);

/// Dimension over Q of (face ring of k) / (linear_forms) in each even degree
/// <= degree_bound, by exact rank computations on the monomial basis. Each
/// linear form has one coefficient per vertex.
GradedDims standard_monomial_count(const SimplicialComplex& k,
                                   const std::vector<IntVec>& linear_forms, int degree_bound);

/// One generator per non-bottom element (degree 2 rank). For incomparable F, G:
/// tau_F tau_G - tau_{F meet G} * sum of tau_E over minimal common upper
/// bounds E, or tau_F tau_G when there is no common upper bound. tau_bottom = 1.
RingPresentation poset_face_ring(const SimplicialPoset& p);

enum class RingClass { Even, Odd };

/// Index in H^2 of the sublattice spanned by square-zero classes of
/// Z[x, y]/(x^2, y^2 + a xy).
std::int64_t square_zero_index(std::int64_t a);

/// Even iff the square-zero classes span H^2.
RingClass hirzebruch_ring_class(std::int64_t a);

}  // namespace torictop::cohomology
