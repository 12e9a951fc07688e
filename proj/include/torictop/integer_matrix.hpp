#pragma once

#include "torictop/exact.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace torictop {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  /// Each input vector becomes a column.
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;
  bool is_zero() const;
  IntMatrix transposed() const;
  std::vector<IntVec> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Solves m * x = b exactly. Columns of m need not be independent; returns the
/// solution with free variables set to zero, or nullopt when b is not in the column span.
std::optional<std::vector<Rational>> solve(const IntMatrix& m, const std::vector<Rational>& b);

/// Inverse of a matrix with determinant +-1; throws InvalidInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Row-style Hermite normal form; zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {x in Z^cols : m x = 0}, one basis vector per
/// row, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
/// Pivot selection takes the entry of minimal absolute value.
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace torictop
