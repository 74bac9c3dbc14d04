#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace nilhodge;

namespace {

const Scalar I = Scalar::imaginary_unit();

Rational q(long n, long d) { return Rational(n, d); }

} // namespace

TEST(Scalar, FieldArithmeticIsExact) {
  const Scalar a(q(1, 2), q(3, 4));
  const Scalar b(q(-2, 3), Rational(5));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(I * I, Scalar(-1));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ((a * a.conj()).im(), 0);
  EXPECT_THROW(a / Scalar(0), std::domain_error);
}

TEST(Scalar, RationalsStayCanonical) {
  const Scalar s(Rational(6, 4));
  EXPECT_EQ(s.re().get_num(), 3);
  EXPECT_EQ(s.re().get_den(), 2);
  const Scalar t(Rational(3, -6));
  EXPECT_EQ(t.re().get_num(), -1);
  EXPECT_EQ(t.re().get_den(), 2);
}

TEST(Scalar, ParsesCoefficientGrammar) {
  EXPECT_EQ(Scalar::parse("3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("-1/2"), q(-1, 2));
  EXPECT_EQ(Scalar::parse("3/4i"), Scalar(Rational(0), Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("1/2+3/4i"), Scalar(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("1/2-3/4i"), Scalar(Rational(1, 2), Rational(-3, 4)));
  EXPECT_EQ(Scalar::parse(" -2i "), Scalar(Rational(0), Rational(-2)));
  for (const char* bad : {"", "1/", "i", "1/0", "1.5", "1+2", "--1", "1/2+i", "3x"})
    EXPECT_THROW(Scalar::parse(bad), ScalarParseError) << bad;
}

TEST(Scalar, TextRoundTrips) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Scalar s = oracle::random_scalar(rng, 9, true);
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << s.to_string();
  }
}

TEST(Rank, IdentityHasFullRank) { EXPECT_EQ(rank(Matrix::identity(3)), 3u); }

TEST(Rank, GaussianMultipleRowsCollapse) {
  // second row is i times the first
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = I;
  m(1, 0) = I;
  m(1, 1) = -1;
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(oracle::minor_rank(m), 1u);
}

TEST(Rank, HeisenbergDegreeTwoDifferential) {
  LieAlgebra n3("n3", 3);
  n3.add_bracket_term(0, 1, 2, 1);
  // Λ^2 -> Λ^3 vanishes: d(x1^x3) = x1^x1^x2 = 0, likewise x2^x3
  const Matrix d2 = oracle::differential(n3, 2);
  EXPECT_EQ(d2.rows(), 1u);
  EXPECT_EQ(d2.cols(), 3u);
  EXPECT_EQ(rank(d2), 0u);
  EXPECT_EQ(rank(differential(n3, 2)), 0u);
  EXPECT_EQ(rank(differential(n3, 1)), 1u);
}

TEST(Kernel, ZeroMatrixGivesUnitVectors) {
  const auto k = kernel_basis(Matrix(2, 3));
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(k[i], unit_vector(3, i));
}

TEST(Kernel, SingleRow) {
  Matrix m(1, 2);
  m(0, 0) = 1;
  m(0, 1) = -1;
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{Scalar(1), Scalar(1)}));
}

TEST(Kernel, HeisenbergDegreeOneDifferential) {
  LieAlgebra n3("n3", 3);
  n3.add_bracket_term(0, 1, 2, 1);
  const auto k = kernel_basis(differential(n3, 1));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], unit_vector(3, 0));
  EXPECT_EQ(k[1], unit_vector(3, 1));
}

TEST(Kernel, Deterministic) {
  std::mt19937 rng(11);
  const Matrix m = oracle::random_matrix(rng, 4, 7, 3, true);
  EXPECT_EQ(kernel_basis(m), kernel_basis(Matrix(m)));
}

TEST(InSpan, Examples) {
  EXPECT_TRUE(in_span(Vector{}, std::vector<Vector>{}));
  EXPECT_TRUE(in_span(zero_vector(2), std::vector<Vector>{}));
  EXPECT_FALSE(in_span(Vector{1, 0}, std::vector<Vector>{{0, 1}}));
  EXPECT_TRUE(in_span(Vector{Scalar(1), I}, std::vector<Vector>{{1, 0}, {0, 1}}));
}

TEST(Solve, RecoversRandomSolution) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = oracle::random_matrix(rng, 4, 5, 4, true);
    Vector x(5);
    for (auto& c : x) c = oracle::random_scalar(rng, 4, true);
    const Vector b = m * x;
    const auto y = solve(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m * *y, b);
  }
}

TEST(Inverse, RandomUnimodular) {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Matrix p = oracle::random_unimodular(rng, 5);
    const auto inv = inverse(p);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(*inv * p, Matrix::identity(5));
    const Scalar det = oracle::determinant(p);
    EXPECT_TRUE(det == Scalar(1) || det == Scalar(-1));
  }
  Matrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  EXPECT_FALSE(inverse(singular).has_value());
}

TEST(SpanBuilder, TracksMembership) {
  SpanBuilder sb(3);
  EXPECT_TRUE(sb.add(Vector{1, 1, 0}));
  EXPECT_FALSE(sb.add(Vector{2, 2, 0}));
  EXPECT_TRUE(sb.contains(Vector{-1, -1, 0}));
  EXPECT_FALSE(sb.contains(Vector{0, 1, 0}));
  EXPECT_TRUE(sb.add(Vector{Scalar(0), I, Scalar(0)}));
  EXPECT_TRUE(sb.contains(Vector{1, 0, 0}));
  EXPECT_EQ(sb.dim(), 2u);
}

// ---- properties ----

TEST(LinalgProperty, RankAgreesWithMinorOracle) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 5;
    const Matrix m = oracle::random_matrix(rng, r, c, 2, t % 2 == 0, 0.5);
    EXPECT_EQ(rank(m), oracle::minor_rank(m)) << m.to_string();
  }
}

TEST(LinalgProperty, RankNullity) {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 6;
    const std::size_t c = 1 + rng() % 8;
    const Matrix m = oracle::random_matrix(rng, r, c, 3, t % 3 == 0, 0.4);
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(LinalgProperty, RankInvariantUnderRowPermutationAndScaling) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 2 + rng() % 5;
    const std::size_t c = 1 + rng() % 6;
    const Matrix m = oracle::random_matrix(rng, r, c, 3, true, 0.4);
    std::vector<std::size_t> perm(r), cols(c);
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p = m.select(perm, cols);
    for (std::size_t i = 0; i < r; ++i) {
      Scalar s;
      while (s.is_zero()) s = oracle::random_scalar(rng, 5, true);
      for (std::size_t j = 0; j < c; ++j) p(i, j) = s * p(i, j);
    }
    EXPECT_EQ(rank(p), rank(m));
  }
}
