#include "torictop/integer_matrix.hpp"

#include "torictop/error.hpp"

#include <algorithm>
#include <utility>

namespace torictop {

namespace mp = boost::multiprecision;

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("ragged matrix column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out(rows_, IntVec(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = to_int64((*this)(r, c));
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidInput("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row echelon form over Q with integer rows kept primitive. Returns pivot columns.
std::vector<std::size_t> echelon(IntMatrix& a, std::vector<Rational>* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
      if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Integer f = a(i, col), g = a(row, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = a(i, c) * g - a(row, c) * f;
      if (rhs) (*rhs)[i] = (*rhs)[i] * Rational(g) - (*rhs)[row] * Rational(f);
      Integer content = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) content = mp::gcd(content, a(i, c));
      if (content > 1) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) /= content;
        if (rhs) (*rhs)[i] /= Rational(content);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return echelon(a, nullptr).size();
}

std::optional<std::vector<Rational>> solve(const IntMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw InvalidInput("right-hand side has wrong length");
  IntMatrix a = m;
  std::vector<Rational> rhs = b;
  auto pivots = echelon(a, &rhs);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = rhs[r] / Rational(a(r, pivots[r]));
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("inverse of non-square matrix");
  Integer det = determinant(m);
  if (det != 1 && det != -1) throw InvalidInput("matrix is not unimodular");
  IntMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    auto x = solve(m, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = mp::numerator((*x)[r]);
  }
  return inv;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Euclid on the column until a single nonzero entry remains at `row`.
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (best == a.rows() || mp::abs(a(i, col)) < mp::abs(a(best, col))))
          best = i;
      if (best == a.rows()) break;
      if (best != row)
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(best, c), a(row, c));
      bool done = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        Integer q = a(i, col) / a(row, col);
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(row, c);
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = -a(row, c);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = a(i, col) / a(row, col);
      if (a(i, col) - q * a(row, col) < 0) q -= 1;
      if (q != 0)
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(row, c);
    }
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Column reduction A U = [H | 0]; trailing columns of U span the kernel.
  IntMatrix a = m;
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(n);
  auto col_op = [&](std::size_t p, std::size_t q, const Integer& x, const Integer& y,
                    const Integer& s, const Integer& t) {
    // (col_p, col_q) <- (x col_p + y col_q, s col_p + t col_q), det = xt - ys = +-1
    for (IntMatrix* mat : {&a, &u})
      for (std::size_t r = 0; r < mat->rows(); ++r) {
        Integer cp = (*mat)(r, p), cq = (*mat)(r, q);
        (*mat)(r, p) = x * cp + y * cq;
        (*mat)(r, q) = s * cp + t * cq;
      }
  };
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < a.rows() && pivot_col < n; ++r) {
    for (std::size_t j = pivot_col + 1; j < n; ++j) {
      if (a(r, j) == 0) continue;
      Integer av = a(r, pivot_col), bv = a(r, j);
      // extended gcd
      Integer old_r = av, rr = bv, old_s = 1, ss = 0, old_t = 0, tt = 1;
      while (rr != 0) {
        Integer q = old_r / rr;
        Integer tmp = old_r - q * rr; old_r = rr; rr = tmp;
        tmp = old_s - q * ss; old_s = ss; ss = tmp;
        tmp = old_t - q * tt; old_t = tt; tt = tmp;
      }
      Integer g = old_r;
      col_op(pivot_col, j, old_s, old_t, -bv / g, av / g);
    }
    if (a(r, pivot_col) != 0) ++pivot_col;
  }
  IntMatrix basis(n - pivot_col, n);
  for (std::size_t k = pivot_col; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) basis(k - pivot_col, r) = u(r, k);
  if (basis.rows() == 0) return basis;
  return hermite_normal_form(basis);
}

std::vector<Integer> smith_invariants(IntMatrix a) {
  std::vector<Integer> diag;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || mp::abs(a(i, j)) < mp::abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        for (auto& d : diag) d = mp::abs(d);
        return diag;
      }
      if (pr != t)
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(pr, c), a(t, c));
      if (pc != t)
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, pc), a(r, t));
      bool clean = true;
      const Integer p = a(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / p;
        for (std::size_t c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / p;
        for (std::size_t r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and go again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(bad, c);
    }
    diag.push_back(a(t, t));
  }
  for (auto& d : diag) d = mp::abs(d);
  return diag;
}

}  // namespace torictop
