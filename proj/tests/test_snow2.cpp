#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "kdfc/cli.hpp"
#include "kdfc/gf2/linalg.hpp"
#include "kdfc/snow2.hpp"
#include "test_util.hpp"

using namespace kdfc;
using namespace kdfc::snow2;

namespace {

u32 word_apply(const BitMatrix& a, u32 w) {
  const BitVector out = gf2::vec_mat(BitVector::from_word(w, 32), a.transposed());
  return static_cast<u32>(out.to_word());
}

std::array<u32, 16> random_state(std::mt19937_64& rng) {
  std::array<u32, 16> s{};
  for (auto& w : s) w = static_cast<u32>(rng());
  return s;
}

}  // namespace

TEST(Snow2, KnownAnswerVectors) {
  const auto doc = nlohmann::json::parse(kdfc::test::read_data("snow2_kat.json"));
  ASSERT_GE(doc.at("vectors").size(), 4U);
  for (const auto& v : doc.at("vectors")) {
    const Key k = cli::parse_key(v.at("key"), v.at("iv"));
    const auto& expected = v.at("keystream");
    const auto z = keystream(k, expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      EXPECT_EQ(cli::hex_word(z[i]), expected[i].get<std::string>()) << v.at("key") << " word " << i;
  }
}

TEST(Snow2, SboxSpotValues) {
  EXPECT_EQ(aes_sbox(0x00), 0x63);
  EXPECT_EQ(aes_sbox(0x53), 0xED);
  EXPECT_EQ(aes_sbox(0xFF), 0x16);
}

TEST(Snow2, AlphaTimesInverseIsIdentity) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const u32 w = static_cast<u32>(rng());
    EXPECT_EQ(div_alpha(mul_alpha(w)), w);
    EXPECT_EQ(mul_alpha(div_alpha(w)), w);
  }
}

TEST(Snow2, AlphaMatricesMatchTableArithmetic) {
  const auto [a, ainv] = build_alpha_matrices();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    const u32 w = static_cast<u32>(rng());
    EXPECT_EQ(word_apply(a, w), mul_alpha(w));
    EXPECT_EQ(word_apply(ainv, w), div_alpha(w));
  }
}

TEST(Snow2, AlphaMinimalPolynomialHasDegree32) {
  const auto [a, ainv] = build_alpha_matrices();
  const Gf2Poly cp = gf2::char_poly(a);
  EXPECT_EQ(cp.degree(), 32);
  EXPECT_TRUE(gf2::is_irreducible(cp));
}

TEST(Snow2, SigmaLfsrMatchesDirectLfsr) {
  std::mt19937_64 rng(3);
  const SigmaConfig cfg = snow2_gains();
  for (int t = 0; t < 5; ++t) {
    const auto s = random_state(rng);
    DirectLfsr direct;
    SigmaLfsr32 sigma(cfg);
    direct.load(s);
    sigma.load(s);
    for (int step = 0; step < 300; ++step) {
      const u32 extra = static_cast<u32>(rng());
      ASSERT_EQ(sigma.feedback(), direct.feedback());
      ASSERT_EQ(sigma.step(extra), direct.step(extra));
    }
  }
}

TEST(Snow2, SigmaCoreReproducesKeystream) {
  const Key k = cli::parse_key("80000000000000000000000000000000", "00000004000000030000000200000001");
  Core<SigmaLfsr32> core;
  core.lfsr() = SigmaLfsr32(snow2_gains());
  core.initialize(k);
  core.clock(false);
  EXPECT_EQ(core.keystream(64), keystream(k, 64));
}

TEST(Snow2, CharPolyIsReciprocalOfReference) {
  const Gf2Poly cp = gf2::char_poly(build_config_matrix(snow2_gains()));
  const Gf2Poly f = snow2_char_poly_reference();
  EXPECT_EQ(cp.degree(), 512);
  EXPECT_EQ(cp, f.reciprocal());
  EXPECT_NE(cp, f);
  EXPECT_TRUE(gf2::is_irreducible(f));
}

TEST(Snow2, LfsrOutputSatisfiesReciprocalRecurrence) {
  // Every bit lane of the output sequence obeys the characteristic polynomial.
  std::mt19937_64 rng(4);
  DirectLfsr l;
  l.load(random_state(rng));
  std::vector<u32> seq;
  for (int i = 0; i < 700; ++i) seq.push_back(l.step());
  const Gf2Poly cp = gf2::char_poly(build_config_matrix(snow2_gains()));
  for (std::size_t t = 0; t + 512 < seq.size(); ++t) {
    u32 acc = 0;
    for (int e = 0; e <= 512; ++e)
      if (cp.coeff(static_cast<std::size_t>(e))) acc ^= seq[t + static_cast<std::size_t>(e)];
    ASSERT_EQ(acc, 0U) << t;
  }
}

TEST(Snow2, KeyValidation) {
  Key k;
  k.key = {1, 2, 3};
  EXPECT_THROW(k.validate(), DomainError);
  EXPECT_THROW(cli::parse_key("0102", "00000000000000000000000000000000"), FormatError);
  EXPECT_THROW(cli::parse_key("80000000000000000000000000000000", "00000000"), DomainError);
}

TEST(Snow2, Key256DiffersFrom128) {
  const Key k128 = cli::parse_key("80000000000000000000000000000000", "00000000000000000000000000000000");
  const Key k256 =
      cli::parse_key("8000000000000000000000000000000000000000000000000000000000000000", "00000000000000000000000000000000");
  EXPECT_NE(keystream(k128, 8), keystream(k256, 8));
}
