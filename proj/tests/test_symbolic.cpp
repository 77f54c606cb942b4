#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "kdfc/confgen.hpp"
#include "kdfc/gf2/primitive_table.hpp"
#include "kdfc/symbolic/qmatrix.hpp"

using namespace kdfc;
using namespace kdfc::symbolic;

namespace {

/// "x_{2} x_{4} + x_{5}" -> polynomial in variables 1..8 (index k-1).
AnfPoly parse_latex(const std::string& s) {
  AnfPoly out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(start, end - start);
    AnfPoly mono = AnfPoly::one();
    const std::regex var(R"(x_\{(\d+)\})");
    for (auto it = std::sregex_iterator(term.begin(), term.end(), var); it != std::sregex_iterator(); ++it)
      mono *= AnfPoly::var(std::stoul((*it)[1]) - 1);
    out += mono;
    start = end + 1;
  }
  return out;
}

const Gf2Poly kExamplePoly = Gf2Poly::from_exponents({8, 4, 3, 2, 0});

const char* kP1 =
    "x_{2} x_{4} x_{6} x_{8} + x_{2} x_{4} x_{7} + x_{2} x_{5} x_{8} + x_{2} x_{6} + x_{3} x_{6} x_{8} + x_{3} x_{7} + "
    "x_{4} x_{5} x_{6} + x_{4} x_{6} + x_{4} x_{8} + x_{5}";
const char* kP2 =
    "x_{1} x_{4} x_{6} x_{8} + x_{1} x_{4} x_{7} + x_{1} x_{5} x_{8} + x_{1} x_{6} + x_{2} x_{3} x_{6} x_{8} + x_{2} x_{3} x_{7} + "
    "x_{2} x_{4} x_{5} x_{8} + x_{2} x_{4} x_{6} x_{7} + x_{2} x_{5} x_{6} + x_{2} x_{5} x_{7} + x_{3} x_{4} x_{8} + "
    "x_{3} x_{5} x_{6} + x_{3} x_{5} x_{8} + x_{3} x_{6} x_{7} + x_{4} x_{5} + x_{4} x_{7}";
const char* kP3 =
    "x_{1} x_{3} x_{6} x_{8} + x_{1} x_{3} x_{7} + x_{1} x_{4} x_{5} x_{8} + x_{1} x_{4} x_{6} x_{7} + x_{1} x_{5} x_{6} + "
    "x_{1} x_{5} x_{7} + x_{2} x_{3} x_{5} x_{8} + x_{2} x_{3} x_{6} x_{7} + x_{2} x_{4} x_{5} x_{7} + x_{2} x_{4} x_{6} + "
    "x_{2} x_{4} x_{8} + x_{2} x_{5} x_{6} + x_{2} x_{6} x_{8} + x_{2} x_{7} + x_{3} x_{4} x_{7} + x_{3} x_{4} x_{8} + "
    "x_{3} x_{5} x_{7} + x_{3} x_{5} + x_{4} x_{5} + x_{4} x_{6}";
const char* kP4 =
    "x_{1} x_{3} x_{5} x_{8} + x_{1} x_{3} x_{6} x_{7} + x_{1} x_{4} x_{5} x_{7} + x_{1} x_{4} x_{6} + x_{1} x_{4} x_{8} + "
    "x_{1} x_{5} x_{6} + x_{2} x_{3} x_{5} x_{7} + x_{2} x_{3} x_{6} + x_{2} x_{4} x_{7} + x_{2} x_{5} x_{8} + x_{2} x_{5} + "
    "x_{2} x_{6} x_{7} + x_{3} x_{4} x_{6} + x_{3} x_{4} x_{7} + x_{3} x_{8} + x_{4} x_{5}";

std::vector<std::uint8_t> random_assignment(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint8_t> a(n);
  for (auto& v : a) v = static_cast<std::uint8_t>(rng() & 1U);
  return a;
}

BitMatrix evaluate(const SymMatrix& a, const std::vector<std::uint8_t>& x) {
  BitMatrix out(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out.set(i, j, a[i][j].evaluate(x));
  return out;
}

/// Numeric Y with the same layout as symbolic_y: e_1 first, then the assigned rows.
BitMatrix numeric_y(std::size_t m, std::size_t n, const std::vector<std::uint8_t>& x) {
  BitMatrix y(m, n);
  y.set(0, n - 1, true);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j <= n; ++j) y.set(i, j - 1, x[var_index(i, j, n)] != 0);
  return y;
}

}  // namespace

TEST(Anf, ArithmeticIsBooleanRing) {
  const AnfPoly x = AnfPoly::var(0), y = AnfPoly::var(1), z = AnfPoly::var(70);
  EXPECT_TRUE((x + x).is_zero());
  EXPECT_EQ(x * x, x);
  EXPECT_EQ(x * (y + z), x * y + x * z);
  EXPECT_EQ(((x + AnfPoly::one()) * (y + AnfPoly::one())).size(), 4U);
  EXPECT_EQ((x * y * z).degree(), 3);
  EXPECT_EQ(AnfPoly::zero().degree(), AnfPoly::kZeroDegree);
  EXPECT_EQ(AnfPoly::one().degree(), 0);
}

TEST(Anf, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    AnfPoly a, b;
    for (int k = 0; k < 6; ++k) {
      a += AnfPoly::var(rng() % 10) * AnfPoly::var(rng() % 10);
      b += AnfPoly::var(rng() % 10) + AnfPoly::constant(rng() & 1U);
    }
    const auto x = random_assignment(10, rng);
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) && b.evaluate(x));
    EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) != b.evaluate(x));
  }
}

TEST(Anf, PrintsOneBasedSortedTerms) {
  const AnfPoly p = AnfPoly::var(4) + AnfPoly::var(0) * AnfPoly::var(2) + AnfPoly::one();
  EXPECT_EQ(p.to_string(), "x1 x3 + x5 + 1");
  EXPECT_EQ(AnfPoly::zero().to_string(), "0");
}

TEST(ExampleQ, RowsMatchPublishedMatrix) {
  const SymMatrix q = build_symbolic_q(2, 4, kExamplePoly);
  ASSERT_EQ(q.size(), 8U);
  EXPECT_EQ(q[1][0], parse_latex("x_{1}"));
  EXPECT_TRUE(q[2][6].is_one());
  EXPECT_EQ(q[3][7], parse_latex("x_{1} + x_{3} + x_{4} + x_{5}"));
  EXPECT_EQ(q[7][7], parse_latex("x_{3} + x_{5} + x_{6} + x_{7}"));
  EXPECT_EQ(q[7][5], parse_latex("x_{1} + x_{3} + x_{4} + x_{5}"));
}

TEST(ExampleQ, InverseColumnMatchesPublishedPolynomials) {
  const SymMatrix q = build_symbolic_q(2, 4, kExamplePoly);
  const auto col = adjugate_column(q, 6);
  EXPECT_EQ(col[0], parse_latex(kP1));
  EXPECT_EQ(col[1], parse_latex(kP2));
  EXPECT_EQ(col[2], parse_latex(kP3));
  EXPECT_EQ(col[3], parse_latex(kP4));
  // the published 1 is det Q, which is 1 wherever Q is invertible
  EXPECT_EQ(col[4], sym_determinant(q));
  for (std::size_t k = 5; k < 8; ++k) EXPECT_TRUE(col[k].is_zero()) << k;
}

TEST(ExampleQ, DiagonalEntryEqualsP4) {
  const Theorem1Result r = theorem1_check(2, 4, kExamplePoly);
  EXPECT_EQ(r.row, 7U);
  EXPECT_EQ(r.entry, parse_latex(kP4));
  EXPECT_EQ(r.entry.degree(), 4);
  EXPECT_TRUE(r.bound_holds);
}

TEST(Lemmas, HoldOnSmallShapes) {
  for (auto [m, b] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    const LemmaReport rep = verify_minor_lemmas(m, b, gf2::primitive_poly(static_cast<int>(m * b)));
    EXPECT_TRUE(rep.all_hold()) << m << "x" << b;
    for (const auto& c : rep.checks) EXPECT_GT(c.entries, 0U) << c.name;
  }
  EXPECT_TRUE(verify_minor_lemmas(2, 4, kExamplePoly).all_hold());
}

TEST(Theorem1, DegreeBoundOnSmallShapes) {
  for (auto [m, b] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {4, 2}}) {
    const Theorem1Result r = theorem1_check(m, b, gf2::primitive_poly(static_cast<int>(m * b)));
    EXPECT_TRUE(r.bound_holds) << m << "x" << b << " degree " << r.entry.degree();
    EXPECT_EQ(r.expected_degree, static_cast<int>(m * b - b));
  }
}

TEST(Theorem1, SingleBlockWidthIsVacuous) {
  const Gf2Poly p = gf2::primitive_poly(6);
  const Theorem1Result r = theorem1_check(1, 6, p);
  EXPECT_TRUE(r.vacuous);
  // with no free variables the entry is the constant coefficient c_5
  EXPECT_EQ(r.entry, AnfPoly::constant(p.coeff(5)));
}

TEST(Symbolic, SpecializationMatchesNumericInverse) {
  std::mt19937_64 rng(2);
  for (auto [m, b] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}, {2, 4}}) {
    const std::size_t n = m * b;
    const Gf2Poly p = gf2::primitive_poly(static_cast<int>(n));
    const SymMatrix q = build_symbolic_q(m, b, p);
    const SymMatrix c = symbolic_config(m, b, p);
    const AnfPoly det = sym_determinant(q);
    int invertible = 0;
    for (int t = 0; t < 40; ++t) {
      const auto x = random_assignment((m - 1) * n, rng);
      const BitMatrix y = numeric_y(m, n, x);
      EXPECT_EQ(evaluate(q, x), [&] {
        BitMatrix out(n, n);
        const BitMatrix pm = gf2::companion_matrix(p);
        for (std::size_t j = 0; j < b; ++j)
          for (std::size_t s = 0; s < m; ++s) out.set_row(j * m + s, gf2::vec_mat(y.row(s), gf2::mat_pow(pm, j)));
        return out;
      }());
      if (!det.evaluate(x)) {
        EXPECT_THROW(build_q(y, p), SingularMatrixError);
        continue;
      }
      ++invertible;
      const BitMatrix qn = build_q(y, p);
      EXPECT_EQ(evaluate(sym_adjugate_inverse(q), x), gf2::mat_inverse(qn));
      const BitMatrix cn = evaluate(c, x);
      EXPECT_TRUE(is_m_companion(cn, m));
      EXPECT_EQ(extract_config(cn, m), assemble_config(qn, p, m));
      EXPECT_EQ(gf2::char_poly(cn), p);
    }
    EXPECT_GT(invertible, 0);
  }
}

TEST(Symbolic, QpIsARowPermutation) {
  const SymMatrix q = build_symbolic_q(2, 3, gf2::primitive_poly(6));
  const SymMatrix qp = permute_to_qp(q, 2, 3);
  EXPECT_EQ(qp[0], q[0]);
  EXPECT_EQ(qp[1], q[2]);
  EXPECT_EQ(qp[3], q[1]);
  EXPECT_EQ(sym_determinant(qp), sym_determinant(q));  // signs vanish over GF(2)
}

TEST(Symbolic, SizeGuards) {
  EXPECT_THROW(build_symbolic_q(4, 4, gf2::primitive_poly(16)), DomainError);
  EXPECT_THROW(theorem1_check(3, 4, gf2::primitive_poly(12)), DomainError);
  EXPECT_THROW(verify_minor_lemmas(4, 3, gf2::primitive_poly(12)), DomainError);
  EXPECT_THROW(build_symbolic_q(2, 3, gf2::primitive_poly(7)), DimensionError);
}
