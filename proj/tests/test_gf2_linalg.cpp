#include <gtest/gtest.h>

#include <random>

#include "kdfc/gf2/linalg.hpp"
#include "test_util.hpp"

using namespace kdfc;
using namespace kdfc::gf2;
using kdfc::test::random_matrix;
using kdfc::test::random_vector;

namespace {

BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool s = false;
      for (std::size_t k = 0; k < a.cols(); ++k) s ^= a.get(i, k) && b.get(k, j);
      c.set(i, j, s);
    }
  return c;
}

/// p(A) by Horner over matrices.
BitMatrix eval_poly(const Gf2Poly& p, const BitMatrix& a) {
  BitMatrix acc(a.rows(), a.cols());
  for (int e = p.degree(); e >= 0; --e) {
    acc = mat_mul(acc, a);
    if (p.coeff(static_cast<std::size_t>(e))) acc = mat_add(acc, BitMatrix::identity(a.rows()));
  }
  return acc;
}

BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix s = random_matrix(n, n, rng);
    if (determinant(s)) return s;
  }
}

}  // namespace

TEST(BitVector, HexRoundTripAcrossWordBoundary) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 3, 4, 63, 64, 65, 130, 500}) {
    const BitVector v = random_vector(n, rng);
    EXPECT_EQ(BitVector::from_hex(v.to_hex(), n), v) << n;
  }
}

TEST(BitVector, HexDigitKHoldsBitsFourKUp) {
  BitVector v(8);
  v.set(0);
  v.set(5);
  EXPECT_EQ(v.to_hex(), "12");
}

TEST(BitVector, FromHexRejectsBadInput) {
  EXPECT_THROW(BitVector::from_hex("1", 8), FormatError);
  EXPECT_THROW(BitVector::from_hex("zz", 8), FormatError);
}

TEST(BitVector, DotAndXor) {
  const BitVector a = BitVector::from_word(0b1011, 4), b = BitVector::from_word(0b0110, 4);
  EXPECT_TRUE(a.dot(b));
  BitVector c = a;
  c ^= b;
  EXPECT_EQ(c, BitVector::from_word(0b1101, 4));
  EXPECT_EQ(a.popcount(), 3U);
}

TEST(BitMatrix, MultiplyMatchesNaiveProduct) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 1 + rng() % 70, k = 1 + rng() % 70, c = 1 + rng() % 70;
    const BitMatrix a = random_matrix(r, k, rng), b = random_matrix(k, c, rng);
    EXPECT_EQ(mat_mul(a, b), naive_mul(a, b));
  }
}

TEST(BitMatrix, DimensionMismatchThrows) {
  EXPECT_THROW(mat_mul(BitMatrix(2, 3), BitMatrix(2, 3)), DimensionError);
  EXPECT_THROW(mat_inverse(BitMatrix(2, 3)), DimensionError);
}

TEST(BitMatrix, TransposeTwiceIsIdentity) {
  std::mt19937_64 rng(3);
  const BitMatrix a = random_matrix(37, 91, rng);
  EXPECT_EQ(a.transposed().transposed(), a);
}

TEST(BitMatrix, InverseTimesMatrixIsIdentity) {
  std::mt19937_64 rng(4);
  for (std::size_t n : {1, 2, 7, 64, 65, 100}) {
    const BitMatrix a = random_invertible(n, rng);
    const BitMatrix inv = mat_inverse(a);
    EXPECT_EQ(mat_mul(a, inv), BitMatrix::identity(n));
    EXPECT_EQ(mat_mul(inv, a), BitMatrix::identity(n));
  }
}

TEST(BitMatrix, SingularInverseThrows) {
  EXPECT_THROW(mat_inverse(BitMatrix::from_lists({{1, 1}, {1, 1}})), SingularMatrixError);
}

TEST(BitMatrix, RankAgreesWithTransposeAndBoundsProducts) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const BitMatrix a = random_matrix(1 + rng() % 40, 1 + rng() % 40, rng);
    const BitMatrix b = random_matrix(a.cols(), 1 + rng() % 40, rng);
    EXPECT_EQ(rank(a), rank(a.transposed()));
    EXPECT_LE(rank(mat_mul(a, b)), std::min(rank(a), rank(b)));
  }
  EXPECT_EQ(rank(BitMatrix::identity(9)), 9U);
  EXPECT_EQ(rank(BitMatrix(4, 4)), 0U);
}

TEST(BitMatrix, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(6);
  const BitMatrix a = random_matrix(12, 12, rng);
  BitMatrix acc = BitMatrix::identity(12);
  for (int e = 0; e < 9; ++e) {
    EXPECT_EQ(mat_pow(a, static_cast<std::uint64_t>(e)), acc);
    acc = mat_mul(acc, a);
  }
}

TEST(SolveRow, SolutionSatisfiesSystem) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const BitMatrix m = random_matrix(1 + rng() % 30, 1 + rng() % 30, rng);
    const BitVector y0 = random_vector(m.rows(), rng);
    const BitVector v = vec_mat(y0, m);
    EXPECT_EQ(vec_mat(solve_row(m, v), m), v);
  }
}

TEST(SolveRow, InconsistentSystemThrows) {
  const BitMatrix m = BitMatrix::from_lists({{1, 0, 0}, {0, 1, 0}});
  EXPECT_THROW(solve_row(m, BitVector::unit_last(3)), NoSolutionError);
}

TEST(Companion, RowActionShiftsAndFeedsBack) {
  const Gf2Poly p = Gf2Poly::from_exponents({4, 1, 0});
  const BitMatrix c = companion_matrix(p);
  // (x0..x3) * P = (x1, x2, x3, x0 + x1)
  const BitVector v = BitVector::from_word(0b0011, 4);
  EXPECT_EQ(vec_mat(v, c), BitVector::from_word(0b0001, 4));
}

TEST(CharPoly, CompanionGivesItsPolynomial) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 80;
    Gf2Poly p = Gf2Poly::monomial(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1U) p.set_coeff(i, true);
    EXPECT_EQ(char_poly(companion_matrix(p)), p);
  }
}

TEST(CharPoly, CayleyHamiltonAndSimilarityInvariance) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 1 + rng() % 24;
    const BitMatrix a = random_matrix(n, n, rng);
    const Gf2Poly p = char_poly(a);
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_TRUE(eval_poly(p, a).is_zero());
    const BitMatrix s = random_invertible(n, rng);
    EXPECT_EQ(char_poly(mat_mul(mat_mul(s, a), mat_inverse(s))), p);
  }
}

TEST(CharPoly, BlockDiagonalMultiplies) {
  std::mt19937_64 rng(10);
  const BitMatrix a = random_matrix(7, 7, rng), b = random_matrix(5, 5, rng);
  BitMatrix d(12, 12);
  d.set_block(0, 0, a);
  d.set_block(7, 7, b);
  EXPECT_EQ(char_poly(d), char_poly(a) * char_poly(b));
}

TEST(BerlekampMassey, RecoversGeneratingPolynomial) {
  const Gf2Poly p = Gf2Poly::from_exponents({7, 1, 0});  // primitive
  std::vector<std::uint8_t> s{1, 0, 0, 0, 0, 0, 0};
  for (std::size_t t = 0; s.size() < 40; ++t) s.push_back(static_cast<std::uint8_t>(s[t] ^ s[t + 1]));
  EXPECT_EQ(berlekamp_massey(s), p);
  EXPECT_EQ(linear_complexity(s), 7U);
}

TEST(BerlekampMassey, Trivial) {
  const std::vector<std::uint8_t> zeros(20, 0);
  EXPECT_EQ(linear_complexity(zeros), 0U);
  std::vector<std::uint8_t> impulse(20, 0);
  impulse.back() = 1;
  EXPECT_EQ(linear_complexity(impulse), 20U);
}

TEST(Krylov, RowsArePowers) {
  std::mt19937_64 rng(11);
  const BitMatrix a = random_matrix(10, 10, rng);
  const BitVector c = random_vector(10, rng);
  const BitMatrix k = krylov_matrix(c, a, 5);
  EXPECT_EQ(k.row(0), c);
  EXPECT_EQ(k.row(3), vec_mat(c, mat_pow(a, 3)));
}
