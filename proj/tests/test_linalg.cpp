#include "kleinian/linalg.hpp"
#include "kleinian/rational.hpp"
#include "kleinian/simplex.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kleinian;

namespace {

RMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias = 2) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), zero(0, zero_bias);
  RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
  return m;
}

/// Low-rank matrix as a product of thin factors.
RMatrix random_rank_deficient(std::size_t rows, std::size_t cols, std::size_t inner, std::mt19937_64& rng) {
  return random_matrix(rows, inner, rng, 0) * random_matrix(inner, cols, rng, 0);
}

// Cofactor expansion; independent of the elimination and Faddeev-LeVerrier paths.
Rational det_cofactor(const RMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    RMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    d += (c % 2 == 0 ? 1 : -1) * m(0, c) * det_cofactor(minor);
  }
  return d;
}

} // namespace

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(to_string(ratio(3, -9)), "-1/3");
  EXPECT_EQ(to_string(ratio(-4, -6)), "2/3");
  EXPECT_THROW(ratio(1, 0), DomainError);
}

TEST(Rational, ParsesAndRejects) {
  EXPECT_EQ(parse_rational("7/21"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1/-2"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_THROW(parse_rational("1.5"), DomainError);
}

TEST(Rational, Floor) {
  EXPECT_EQ(kleinian::floor(Rational(7, 2)), 3);
  EXPECT_EQ(kleinian::floor(Rational(-7, 2)), -4);
  EXPECT_EQ(kleinian::floor(Rational(4)), 4);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(RMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(RMatrix(0, 5)), 0u);
  EXPECT_EQ(rank(RMatrix(5, 0)), 0u);
}

TEST(Rank, BareissAgreesWithGaussJordan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const RMatrix m = trial % 2 == 0 ? random_matrix(rows, cols, rng) : random_rank_deficient(rows, cols, 1 + rng() % 3, rng);
    const std::size_t r = rank(m);
    EXPECT_EQ(r, rref(m).pivots.size());
    EXPECT_LE(r, std::min(rows, cols));
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(RMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(RMatrix(2, 3)).size(), 3u);
  const auto k = kernel_basis(RMatrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    const RMatrix m = random_rank_deficient(rows, cols, 1 + rng() % 3, rng);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(rank(m) + basis.size(), cols);
    for (const auto& v : basis) {
      const RVector image = m * v;
      for (const auto& x : image) EXPECT_EQ(x, 0);
    }
    EXPECT_EQ(rank(RMatrix::from_columns(basis, cols)), basis.size());
  }
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const RMatrix m = random_matrix(n, n, rng, 0);
    if (rank(m) < n) continue;
    EXPECT_EQ(m * inverse(m), RMatrix::identity(n));
  }
  EXPECT_THROW(inverse(RMatrix{{1, 2}, {2, 4}}), DomainError);
  EXPECT_THROW(inverse(RMatrix(2, 3)), ShapeError);
}

TEST(Closure, Examples) {
  const std::size_t n = 3;
  RVector e1{1, 0, 0};
  EXPECT_EQ(closure_under({RMatrix::identity(n)}, {e1}, n), Subspace::span({e1}, n));
  RMatrix shift(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) shift(i + 1, i) = 1;
  EXPECT_EQ(closure_under({shift}, {e1}, n).dim(), n);
  RVector v{Rational(1, 2), 3, -1};
  EXPECT_EQ(closure_under({}, {v}, n), Subspace::span({v}, n));
  EXPECT_THROW(closure_under({RMatrix(2, 2)}, {e1}, n), ShapeError);
}

TEST(Closure, InvariantAndIdempotent) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<RMatrix> ops;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) ops.push_back(random_matrix(n, n, rng, 4));
    const Subspace s = closure_under(ops, {random_matrix(n, 1, rng, 1).col(0)}, n);
    for (const auto& b : s.basis())
      for (const auto& op : ops) EXPECT_TRUE(s.contains(op * b));
    EXPECT_EQ(closure_under(ops, s.basis(), n), s);
  }
}

TEST(Subspace, CanonicalEquality) {
  const std::size_t n = 3;
  const Subspace a = Subspace::span({{1, 1, 0}, {0, 1, 1}}, n);
  const Subspace b = Subspace::span({{1, 2, 1}, {1, 0, -1}}, n);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.contains({1, 0, 0}));
  EXPECT_TRUE(a.contains({2, 3, 1}));
}

TEST(CharacteristicPolynomial, MatchesCofactorDeterminant) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const RMatrix a = random_matrix(n, n, rng, 1);
    const RVector c = characteristic_polynomial(a);
    ASSERT_EQ(c.size(), n + 1);
    for (int t = -2; t <= 2; ++t) {
      Rational value = 0, tp = 1;
      for (const auto& ck : c) {
        value += ck * tp;
        tp *= t;
      }
      EXPECT_EQ(value, det_cofactor(Rational(t) * RMatrix::identity(n) - a));
    }
  }
}

TEST(RationalRoots, SplitAndNonSplit) {
  // (t - 1/2)^2 (t + 3) t  =  t^4 + 2t^3 - 11/4 t^2 + 3/4 t
  const auto roots = rational_roots({0, Rational(3, 4), Rational(-11, 4), 2, 1});
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], std::make_pair(Rational(-3), std::size_t{1}));
  EXPECT_EQ(roots[1], std::make_pair(Rational(0), std::size_t{1}));
  EXPECT_EQ(roots[2], std::make_pair(Rational(1, 2), std::size_t{2}));
  // t^2 - 2 has no rational roots.
  EXPECT_TRUE(rational_roots({-2, 0, 1}).empty());
}

TEST(Simplex, SmallProblems) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6 -> (8/5, 6/5), value 14/5
  const LpResult r = simplex_maximize(RMatrix{{1, 2}, {3, 1}}, {4, 6}, {1, 1});
  ASSERT_EQ(r.status, LpResult::Status::Optimal);
  EXPECT_EQ(r.value, Rational(14, 5));
  EXPECT_EQ(r.x, (RVector{Rational(8, 5), Rational(6, 5)}));
  EXPECT_EQ(simplex_maximize(RMatrix{{1, -1}}, {1}, {0, 1}).status, LpResult::Status::Unbounded);
  EXPECT_THROW(simplex_maximize(RMatrix{{1}}, {-1}, {1}), DomainError);
}
