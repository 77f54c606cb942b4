#include <gtest/gtest.h>

#include "kdfc/cli.hpp"
#include "kdfc/kdfc_snow.hpp"

using namespace kdfc;

namespace {

KdfcParams params(const std::string& key, const std::string& iv) {
  KdfcParams p;
  p.key = cli::parse_key(key, iv);
  return p;
}

const char* kKey = "681,884,35,345,203,50,912,358";
const char* kIv = "645,473,798,506";

}  // namespace

TEST(KdfcSnow, DerivedConfigHasTargetCharPoly) {
  const KdfcSnow s(params(kKey, kIv));
  EXPECT_EQ(gf2::char_poly(build_config_matrix(s.config())), snow2::snow2_char_poly_reference());
  EXPECT_EQ(s.captured_f().size(), snow2::kInitClocks);
}

TEST(KdfcSnow, DetachedLfsrObeysTargetRecurrence) {
  const KdfcSnow s(params(kKey, kIv));
  const auto seq = detached_lfsr_output(s.config(), s.lfsr_words(), 1500);
  EXPECT_EQ(recurrence_violations(seq, snow2::snow2_char_poly_reference()), 0U);
  // the fixed SNOW 2.0 gains do not satisfy f, only its reciprocal
  const auto plain = detached_lfsr_output(snow2::snow2_gains(), s.lfsr_words(), 1500);
  EXPECT_GT(recurrence_violations(plain, snow2::snow2_char_poly_reference()), 0U);
  EXPECT_EQ(recurrence_violations(plain, snow2::snow2_char_poly_reference().reciprocal()), 0U);
}

TEST(KdfcSnow, KeysAndIvsSelectDifferentConfigs) {
  const KdfcSnow a(params(kKey, kIv));
  const KdfcSnow b(params("681,884,35,345,203,50,912,359", kIv));
  const KdfcSnow c(params(kKey, "645,473,798,507"));
  EXPECT_NE(a.config(), b.config());
  EXPECT_NE(a.config(), c.config());
  KdfcSnow a2(params(kKey, kIv));
  KdfcSnow b2(params("681,884,35,345,203,50,912,359", kIv));
  EXPECT_NE(a2.keystream(16), b2.keystream(16));
}

TEST(KdfcSnow, Deterministic) {
  KdfcSnow a(params(kKey, kIv)), b(params(kKey, kIv));
  EXPECT_EQ(a.config(), b.config());
  EXPECT_EQ(a.keystream(100), b.keystream(100));
  EXPECT_TRUE(a.keystream(0).empty());
}

TEST(KdfcSnow, AllOfflineMakesConfigKeyIndependent) {
  KdfcParams p = params(kKey, kIv);
  p.y_init = y_offline_seeded(kKdfcM, kKdfcB, kKdfcIterations, 11);
  EXPECT_EQ(p.online(), 0U);
  KdfcParams q = p;
  q.key = cli::parse_key("1,2,3,4", "5,6,7,8");
  const KdfcSnow a(p), b(q);
  EXPECT_EQ(a.config(), b.config());
  EXPECT_EQ(gf2::char_poly(build_config_matrix(a.config())), p.target);
}

TEST(KdfcSnow, OnlineIterationsBeyondCapturedWordsAreRejected) {
  KdfcParams p = params(kKey, kIv);
  p.y_init = y_offline_seeded(kKdfcM, kKdfcB, 440, 1);
  EXPECT_THROW(KdfcSnow{p}, DomainError);
}

TEST(KdfcSnow, OutputIsFsmWordXorOldestBlock) {
  KdfcSnow s(params(kKey, kIv));
  auto& core = s.core();
  for (int i = 0; i < 50; ++i) {
    const auto w = s.lfsr_words();
    const auto fsm = s.fsm();
    const std::uint32_t f = snow2::boxplus(w[15], fsm.r1) ^ fsm.r2;
    EXPECT_EQ(core.output() ^ f, w[0]);
    core.clock(false);
  }
}

TEST(KdfcSnow, SwappingInSnowGainsMatchesReferenceLfsr) {
  KdfcSnow s(params(kKey, kIv));
  s.keystream(7);
  snow2::Core<snow2::DirectLfsr> ref;
  ref.lfsr().load(s.lfsr_words());
  ref.fsm() = s.fsm();
  s.reconfigure(snow2::snow2_gains());
  EXPECT_EQ(s.keystream(200), ref.keystream(200));
}

TEST(KdfcSnow, ReconfigureKeepsStateAndIsIdempotent) {
  KdfcSnow a(params(kKey, kIv)), b(params(kKey, kIv));
  const SigmaConfig other = generate_config_seeded(kKdfcM, kKdfcB, snow2::snow2_char_poly_reference(), 468, 3);
  const auto before = a.lfsr_words();
  a.reconfigure(other);
  EXPECT_EQ(a.lfsr_words(), before);
  b.reconfigure(other);
  b.reconfigure(other);
  EXPECT_EQ(a.keystream(64), b.keystream(64));
  EXPECT_THROW(a.reconfigure(SigmaConfig{8, 4, std::vector<BitMatrix>(4, BitMatrix(8, 8))}), DimensionError);
}

TEST(KdfcSnow, DiscardShiftsTheStream) {
  KdfcParams p = params(kKey, kIv);
  p.discard = 0;
  KdfcSnow raw(p);
  KdfcSnow dflt(params(kKey, kIv));
  const auto all = raw.keystream(kDefaultDiscard + 20);
  EXPECT_EQ(std::vector<std::uint32_t>(all.begin() + kDefaultDiscard, all.end()), dflt.keystream(20));
}

TEST(KdfcSnow, ParamValidation) {
  KdfcParams p = params(kKey, kIv);
  p.target = gf2::primitive_poly(64);
  EXPECT_THROW(p.validate(), DimensionError);
  EXPECT_THROW(recurrence_violations(std::vector<std::uint32_t>{1, 2}, Gf2Poly::one()), DomainError);
}
