#include <gtest/gtest.h>

#include <random>

#include "kdfc/randtests.hpp"

using namespace kdfc;
using namespace kdfc::randtests;

namespace {

Bits bits(const std::string& s) {
  Bits out;
  for (char c : s) out.push_back(static_cast<std::uint8_t>(c == '1'));
  return out;
}

Bits random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bits out(n);
  for (std::size_t i = 0; i < n; i += 64) {
    const std::uint64_t w = rng();
    for (std::size_t j = 0; j < 64 && i + j < n; ++j) out[i + j] = static_cast<std::uint8_t>((w >> j) & 1U);
  }
  return out;
}

Params loose() {
  Params p;
  p.enforce_minimum = false;
  return p;
}

const char* kLongRunExample =
    "11001100000101010110110001001100111000000000001001001101010100010001001111010110100000001101011111001100111001101101"
    "100010110010";

}  // namespace

TEST(WorkedExamples, Monobit) { EXPECT_NEAR(monobit(bits("1011010101"), loose()).p_value, 0.527089, 1e-6); }

TEST(WorkedExamples, BlockFrequency) {
  Params p = loose();
  p.block_frequency_m = 3;
  EXPECT_NEAR(block_frequency(bits("0110011010"), p).p_value, 0.801252, 1e-6);
}

TEST(WorkedExamples, Runs) { EXPECT_NEAR(runs(bits("1001101011"), loose()).p_value, 0.147232, 1e-6); }

TEST(WorkedExamples, LongestRun) {
  const Bits e = bits(kLongRunExample);
  ASSERT_EQ(e.size(), 128U);
  // the published value was computed with rounded class probabilities
  EXPECT_NEAR(longest_run(e, loose()).p_value, 0.180609, 1e-4);
}

TEST(WorkedExamples, CumulativeSums) {
  EXPECT_NEAR(cumulative_sums(bits("1011010111"), true, loose()).p_value, 0.4116588, 1e-6);
}

TEST(WorkedExamples, Serial) {
  Params p = loose();
  p.serial_m = 3;
  const auto r = serial(bits("0011011101"), p);
  EXPECT_NEAR(r[0].p_value, 0.808792, 1e-6);
  EXPECT_NEAR(r[1].p_value, 0.670320, 1e-6);
}

TEST(WorkedExamples, ApproximateEntropy) {
  Params p = loose();
  p.apen_m = 3;
  EXPECT_NEAR(approximate_entropy(bits("0100110101"), p).p_value, 0.261961, 1e-6);
}

TEST(Battery, NamesAndOrder) {
  const auto rs = run_battery(random_bits(1000000, 42));
  ASSERT_EQ(rs.size(), test_names().size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    EXPECT_EQ(rs[i].name, test_names()[i]);
    EXPECT_GE(rs[i].p_value, 0.0);
    EXPECT_LE(rs[i].p_value, 1.0);
    EXPECT_EQ(rs[i].pass, rs[i].p_value >= kAlpha);
  }
  EXPECT_THROW(run_test("no-such-test", random_bits(100, 1)), DomainError);
}

TEST(Battery, DegenerateSequencesFail) {
  const Bits zeros(1000000, 0);
  for (const auto& r : run_battery(zeros)) EXPECT_FALSE(r.pass) << r.name;
  Bits alt(1000000);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = static_cast<std::uint8_t>(i & 1U);
  EXPECT_TRUE(monobit(alt).pass);
  EXPECT_FALSE(runs(alt).pass);
  EXPECT_FALSE(serial(alt)[0].pass);
}

TEST(Battery, LfsrSequenceFailsLinearComplexity) {
  Bits e(200000);
  for (std::size_t i = 0; i < 7; ++i) e[i] = static_cast<std::uint8_t>(i == 0);
  for (std::size_t t = 7; t < e.size(); ++t) e[t] = e[t - 7] ^ e[t - 6];
  EXPECT_LT(linear_complexity(e).p_value, 1e-6);
}

TEST(Battery, RandomControlPassRate) {
  // At alpha = 0.01 roughly 1% of random sequences fail any given test.
  std::vector<std::size_t> passes(test_names().size(), 0);
  const int trials = 40;
  for (int s = 0; s < trials; ++s) {
    const auto rs = run_battery(random_bits(100000, 1000 + static_cast<std::uint64_t>(s)));
    for (std::size_t i = 0; i < rs.size(); ++i) passes[i] += rs[i].pass;
  }
  for (std::size_t i = 0; i < passes.size(); ++i) EXPECT_GE(passes[i], 36U) << test_names()[i];
}

TEST(Battery, InsufficientData) {
  EXPECT_THROW(monobit(Bits(50, 1)), InsufficientDataError);
  EXPECT_THROW(rank(random_bits(1000, 1)), InsufficientDataError);
  try {
    linear_complexity(random_bits(1000, 1));
    FAIL();
  } catch (const InsufficientDataError& e) {
    EXPECT_EQ(e.required, 100000U);
  }
  EXPECT_THROW(monobit(Bits{}, loose()), InsufficientDataError);
}

TEST(BitPacking, WordsAreMostSignificantBitFirst) {
  const std::vector<std::uint32_t> w{0x80000001U};
  const Bits b = bits_from_words(w);
  ASSERT_EQ(b.size(), 32U);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], 0);
  EXPECT_EQ(b[31], 1);
}
