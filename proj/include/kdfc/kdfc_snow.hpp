#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kdfc/confgen.hpp"
#include "kdfc/data/yinit_k468.hpp"
#include "kdfc/error.hpp"
#include "kdfc/gf2/linalg.hpp"
#include "kdfc/snow2.hpp"

namespace kdfc {

inline constexpr std::size_t kKdfcM = 32;
inline constexpr std::size_t kKdfcB = 16;
inline constexpr std::size_t kKdfcIterations = kKdfcM * kKdfcB - kKdfcM;  // 480
inline constexpr std::size_t kDefaultOffline = 468;
inline constexpr std::size_t kDefaultDiscard = 32;

/// The shipped Y_init for k = 468.
inline const YMatrix& default_y_init() {
  static const YMatrix y = y_from_text(data::kYInitK468Text);
  return y;
}

struct KdfcParams {
  snow2::Key key;
  YMatrix y_init = default_y_init();
  const PolyTable* table = nullptr;  // null = default table
  Gf2Poly target = snow2::snow2_char_poly_reference();
  std::size_t discard = kDefaultDiscard;

  std::size_t offline() const noexcept { return y_init.iterations; }
  std::size_t online() const noexcept { return kKdfcIterations - y_init.iterations; }

  void validate() const {
    key.validate();
    if (y_init.m() != kKdfcM) throw DimensionError("KdfcParams: y_init must have 32 rows");
    if (y_init.iterations > kKdfcIterations) throw DomainError("KdfcParams: k exceeds 480");
    if (online() > snow2::kInitClocks) throw DomainError("KdfcParams: more online iterations than captured F values");
    if (target.degree() != static_cast<int>(kKdfcM * kKdfcB)) throw DimensionError("KdfcParams: target must have degree 512");
  }
};

/// SNOW 2.0 FSM over a sigma-LFSR whose gains come from the key.
class KdfcSnow {
 public:
  using u32 = snow2::u32;

  /// Key/IV load and 32 init-mode clocks with the public SNOW 2.0 gains, capturing F;
  /// the last `online` F values fill the remaining generator iterations; the new
  /// gains replace the old ones and `discard` output words are dropped.
  explicit KdfcSnow(const KdfcParams& p) {
    p.validate();
    const PolyTable& table = p.table ? *p.table : gf2::default_poly_table();
    core_.lfsr() = snow2::SigmaLfsr32(snow2::snow2_gains());
    captured_ = core_.initialize(p.key);
    const std::vector<u32> tail(captured_.end() - static_cast<std::ptrdiff_t>(p.online()), captured_.end());
    const FillBits fill = FillBits::from_words(std::vector<std::uint64_t>(tail.begin(), tail.end()), kKdfcM);
    cfg_ = generate_config(kKdfcM, kKdfcB, p.target, p.y_init, fill, table);
    core_.lfsr().reconfigure(cfg_);
    core_.keystream(p.discard);
  }

  std::vector<u32> keystream(std::size_t n) { return core_.keystream(n); }

  /// Swap gains; delay blocks and FSM registers are kept.
  void reconfigure(const SigmaConfig& cfg) {
    if (cfg.m != kKdfcM || cfg.b != kKdfcB) throw DimensionError("reconfigure: configuration must be 32 x 16");
    core_.lfsr().reconfigure(cfg);
    cfg_ = cfg;
  }

  const SigmaConfig& config() const noexcept { return cfg_; }
  const std::vector<u32>& captured_f() const noexcept { return captured_; }
  std::array<u32, 16> lfsr_words() const { return core_.lfsr().words(); }
  const snow2::FsmState& fsm() const noexcept { return core_.fsm(); }
  snow2::Core<snow2::SigmaLfsr32>& core() noexcept { return core_; }

 private:
  snow2::Core<snow2::SigmaLfsr32> core_;
  SigmaConfig cfg_;
  std::vector<u32> captured_;
};

inline KdfcSnow kdfc_init(const KdfcParams& p) { return KdfcSnow(p); }

inline std::vector<std::uint32_t> kdfc_keystream(KdfcSnow& s, std::size_t n) { return s.keystream(n); }

/// Number of (time, bit) positions where a word sequence breaks the linear
/// recurrence of p: bit j of s_{t+d} must equal the XOR of bit j of s_{t+i} over
/// the nonzero low coefficients c_i of p.
inline std::size_t recurrence_violations(std::span<const std::uint32_t> seq, const Gf2Poly& p) {
  const int d = p.degree();
  if (d < 1) throw DomainError("recurrence_violations: degree must be >= 1");
  std::vector<std::size_t> taps;
  for (int e : p.exponents())
    if (e < d) taps.push_back(static_cast<std::size_t>(e));
  std::size_t bad = 0;
  for (std::size_t t = 0; t + static_cast<std::size_t>(d) < seq.size(); ++t) {
    std::uint32_t acc = 0;
    for (auto e : taps) acc ^= seq[t + e];
    bad += static_cast<std::size_t>(std::popcount(acc ^ seq[t + static_cast<std::size_t>(d)]));
  }
  return bad;
}

/// Words leaving block 0 of a detached sigma-LFSR (no FSM) over `steps` clocks.
inline std::vector<std::uint32_t> detached_lfsr_output(const SigmaConfig& cfg, const std::array<std::uint32_t, 16>& state,
                                                       std::size_t steps) {
  snow2::SigmaLfsr32 l(cfg);
  l.load(state);
  std::vector<std::uint32_t> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.push_back(l.step());
  return out;
}

}  // namespace kdfc
