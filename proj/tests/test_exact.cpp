#include "torictop/error.hpp"
#include "torictop/exact.hpp"
#include "torictop/integer_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace torictop;

namespace {

Integer cofactor_det(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntVec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = Integer(m[0][c]) * cofactor_det(minor);
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

}  // namespace

TEST(Exact, BinomialEdges) {
  EXPECT_EQ(binomial(6, 4), 15);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
  EXPECT_THROW(binomial64(100, 50), std::overflow_error);
}

TEST(Exact, RationalTextRoundTrip) {
  for (const char* s : {"3", "-7", "1/2", "-5/3", "0"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
}

TEST(Exact, FloorCeil) {
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
  EXPECT_EQ(ceil_of(Rational(-1, 2)), 0);
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(ceil_of(Rational(4)), 4);
}

TEST(Exact, CheckedArithmetic) {
  EXPECT_THROW(checked_mul(INT64_MAX, 2), std::overflow_error);
  EXPECT_THROW(checked_add(INT64_MAX, 1), std::overflow_error);
  EXPECT_EQ(checked_mul(-3, 4), -12);
}

TEST(Exact, Primitive) {
  IntVec v{4, -6, 8};
  EXPECT_FALSE(is_primitive(v));
  EXPECT_EQ(primitive_part(v), (IntVec{2, -3, 4}));
  EXPECT_TRUE(is_primitive(IntVec{2, -3, 4}));
  EXPECT_EQ(primitive_part(IntVec{0, 0}), (IntVec{0, 0}));
}

TEST(IntegerMatrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    std::vector<IntVec> rows(n, IntVec(n));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    EXPECT_EQ(determinant(IntMatrix::from_rows(rows, n)), cofactor_det(rows));
  }
}

TEST(IntegerMatrix, KernelAnnihilatesAndHasRightRank) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 3), c = 4;
    std::vector<IntVec> rows(r, IntVec(c));
    for (auto& row : rows)
      for (auto& x : row) x = d(rng);
    IntMatrix m = IntMatrix::from_rows(rows, c);
    IntMatrix k = integer_kernel(m);
    EXPECT_EQ(k.rows(), c - rank(m));
    if (k.rows() > 0) {
      EXPECT_TRUE((m * k.transposed()).is_zero());
    }
    for (const auto& v : k.to_rows()) EXPECT_TRUE(is_primitive(v));
  }
}

TEST(IntegerMatrix, SmithInvariants) {
  EXPECT_EQ(smith_invariants(IntMatrix::from_rows({{2}}, 1)), (std::vector<Integer>{2}));
  auto inv = smith_invariants(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3));
  EXPECT_EQ(inv, (std::vector<Integer>{2, 6, 12}));
  EXPECT_TRUE(smith_invariants(IntMatrix(2, 3)).empty());
  // Product of invariants equals |det| for nonsingular random matrices.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVec> rows(3, IntVec(3));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    IntMatrix m = IntMatrix::from_rows(rows, 3);
    Integer det = abs(determinant(m));
    auto f = smith_invariants(m);
    if (det == 0) {
      EXPECT_LT(f.size(), 3u);
      continue;
    }
    Integer prod = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      prod *= f[i];
      if (i > 0) {
        EXPECT_EQ(f[i] % f[i - 1], 0);
      }
    }
    EXPECT_EQ(prod, det);
  }
}

TEST(IntegerMatrix, UnimodularInverse) {
  IntMatrix m = IntMatrix::from_rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(m * unimodular_inverse(m), IntMatrix::identity(2));
  EXPECT_THROW(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)), InvalidInput);
}

TEST(IntegerMatrix, SolveExactly) {
  IntMatrix m = IntMatrix::from_rows({{1, 1}, {1, -1}}, 2);
  auto x = solve(m, {Rational(3), Rational(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve(IntMatrix::from_rows({{1, 1}, {2, 2}}, 2), {Rational(1), Rational(3)}));
}
