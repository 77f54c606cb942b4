#include <gtest/gtest.h>

#include <random>

#include "kdfc/attacks.hpp"
#include "kdfc/snow2.hpp"

using namespace kdfc;
using namespace kdfc::attacks;

namespace {

bool all_known(const NodeSet& s) {
  return std::all_of(s.begin(), s.end(), [](std::uint8_t v) { return v != 0; });
}

NodeSet from_nodes(std::size_t n, const std::vector<std::size_t>& nodes) {
  NodeSet s(n, 0);
  for (auto v : nodes) s[v] = 1;
  return s;
}

/// Smallest guess set whose closure is everything, by enumerating subsets.
std::size_t exhaustive_min_basis(const IndexTables& t) {
  const std::size_t n = t.node_count;
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    NodeSet s(n, 0);
    for (std::size_t v = 0; v < n; ++v) s[v] = (mask >> v) & 1U;
    if (all_known(gd_closure(t, s))) best = size;
  }
  return best;
}

IndexTables random_tables(std::size_t n, std::size_t rows, std::mt19937_64& rng) {
  IndexTables t{n, {}};
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::size_t> row;
    const std::size_t len = 2 + rng() % 3;
    while (row.size() < len) {
      const std::size_t v = rng() % n;
      if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
    }
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace

TEST(Bias, PileupAndKeystream) {
  EXPECT_DOUBLE_EQ(pileup_bias(-27.61, 250), -6653.5);
  EXPECT_DOUBLE_EQ(keystream_needed(pileup_bias(-27.61, 250)), 13307.0);
  EXPECT_NEAR(pileup_bias(-15.496, 250), -3625.0, 1e-9);
  EXPECT_NEAR(keystream_needed(pileup_bias(-15.496, 250)), 7250.0, 1e-9);
  EXPECT_DOUBLE_EQ(pileup_bias(-3.0, 1), -3.0);
  EXPECT_THROW(pileup_bias(-1.0, 0), DomainError);
  EXPECT_THROW(pileup_bias(1.0, 2), DomainError);
  EXPECT_THROW(keystream_needed(0.0), DomainError);
}

TEST(Linearization, BinomialSums) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(linearization_size(10, 10), BigInt(1024));
  EXPECT_EQ(linearization_size(544, 2), BigInt(1 + 544 + 544 * 543 / 2));
  EXPECT_NEAR(log2_big(linearization_size(544, 2)), 17.18, 0.01);
  const double big = log2_big(linearization_size(16416, 497));
  EXPECT_NEAR(big, 3207.0, 2.0);
  EXPECT_NEAR(log2_big(BigInt(1) << 3000), 3000.0, 1e-9);
  EXPECT_THROW(linearization_size(3, 4), DomainError);
  EXPECT_THROW(log2_big(BigInt(0)), DomainError);
}

TEST(Tables, SnowShape) {
  const IndexTables t = build_snow2_tables();
  EXPECT_EQ(t.node_count, 56U);
  EXPECT_EQ(t.rows.size(), 57U);
  EXPECT_EQ(t.rows[0], (std::vector<std::size_t>{0, 2, 11, 16}));
  EXPECT_EQ(t.rows[19], (std::vector<std::size_t>{4, 35, 37}));
  EXPECT_EQ(t.rows[38], (std::vector<std::size_t>{0, 15, 36, 37}));
  EXPECT_NO_THROW(t.validate());
}

TEST(Tables, RecurrenceShape) {
  const IndexTables t = recurrence_row_tables(snow2::snow2_char_poly_reference());
  EXPECT_EQ(t.rows.size(), 3U * 514U);
  EXPECT_EQ(t.node_count, 1542U);
  EXPECT_EQ(std::vector<std::size_t>(t.rows[0].begin(), t.rows[0].begin() + 4), (std::vector<std::size_t>{512, 510, 504, 502}));
  EXPECT_EQ(t.rows[513].front(), 1025U);
  EXPECT_EQ(t.rows[513].back(), 513U);
  EXPECT_NO_THROW(t.validate());
  EXPECT_THROW(recurrence_row_tables(gf2::Gf2Poly::one()), DomainError);
}

TEST(Tables, ValidateRejectsBadRows) {
  EXPECT_THROW((IndexTables{3, {{0, 3}}}.validate()), DomainError);
  EXPECT_THROW((IndexTables{3, {{}}}.validate()), DomainError);
}

TEST(Closure, ChainPropagates) {
  const IndexTables t{5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}};
  EXPECT_TRUE(all_known(gd_closure(t, from_nodes(5, {0, 1}))));
  EXPECT_EQ(gd_closure(t, from_nodes(5, {0})), from_nodes(5, {0}));
  EXPECT_THROW(gd_closure(t, NodeSet(4, 0)), DimensionError);
}

TEST(Closure, MonotoneExtensiveIdempotent) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const IndexTables t = random_tables(12, 10, rng);
    NodeSet a(12, 0);
    for (auto& v : a) v = static_cast<std::uint8_t>(rng() % 4 == 0);
    NodeSet b = a;
    b[rng() % 12] = 1;
    const NodeSet ca = gd_closure(t, a), cb = gd_closure(t, b);
    for (std::size_t v = 0; v < 12; ++v) {
      EXPECT_LE(a[v], ca[v]);
      EXPECT_LE(ca[v], cb[v]);
    }
    EXPECT_EQ(gd_closure(t, ca), ca);
  }
}

TEST(GdSearch, CoversAndIsNeverBelowExhaustiveMinimum) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const IndexTables t = random_tables(10, 9, rng);
    const std::size_t opt = exhaustive_min_basis(t);
    const GdPath p = gd_search(t, {16, 1});
    EXPECT_TRUE(p.covers);
    EXPECT_EQ(p.eliminated, t.node_count);
    EXPECT_GE(p.nodes.size(), opt);
    EXPECT_TRUE(all_known(gd_closure(t, from_nodes(t.node_count, p.nodes))));
  }
}

TEST(GdSearch, ChainIsOptimal) {
  const IndexTables t{5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}};
  EXPECT_EQ(gd_search(t).nodes.size(), exhaustive_min_basis(t));
}

TEST(GdSearch, SnowBasisAndThreadIndependence) {
  const IndexTables t = build_snow2_tables();
  const GdPath p = gd_search(t);
  EXPECT_LE(p.nodes.size(), 9U);
  EXPECT_TRUE(all_known(gd_closure(t, from_nodes(t.node_count, p.nodes))));
  EXPECT_EQ(gd_complexity_log2(p), 32U * p.nodes.size());
  EXPECT_EQ(gd_search(t, {16, 1}).nodes, p.nodes);
}

TEST(GdSearch, StageLimitAndBadOptions) {
  const IndexTables t = build_snow2_tables();
  EXPECT_THROW(gd_search(t, {3, 1}), NoSolutionError);
  EXPECT_THROW(gd_search(t, {0, 1}), DomainError);
}
