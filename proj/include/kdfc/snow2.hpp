#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/bit_matrix.hpp"
#include "kdfc/gf2/linalg.hpp"
#include "kdfc/gf2/poly.hpp"
#include "kdfc/sigma_lfsr.hpp"

namespace kdfc::snow2 {

using u32 = std::uint32_t;

inline constexpr unsigned kBetaPoly = 0x1A9;  // x^8 + x^7 + x^5 + x^3 + 1
inline constexpr unsigned kAesPoly = 0x11B;   // x^8 + x^4 + x^3 + x + 1
inline constexpr std::size_t kInitClocks = 32;

constexpr std::uint8_t gf256_mul(unsigned a, unsigned b, unsigned poly) noexcept {
  unsigned r = 0;
  a &= 0xFF;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    if (a & 0x100) a ^= poly;
    b >>= 1;
  }
  return static_cast<std::uint8_t>(r);
}

constexpr std::uint8_t beta_pow(unsigned k) noexcept {
  unsigned r = 1;
  for (unsigned i = 0; i < k; ++i) r = gf256_mul(r, 2, kBetaPoly);
  return static_cast<std::uint8_t>(r);
}

/// Exponents e3..e0 of alpha^4 = beta^e3 alpha^3 + beta^e2 alpha^2 + beta^e1 alpha + beta^e0.
inline constexpr std::array<unsigned, 4> kAlphaPolyExp = {23, 245, 48, 239};
/// Byte multipliers beta^e of the alpha^-1 table, most significant output byte first.
inline constexpr std::array<unsigned, 4> kAlphaInvExp = {16, 39, 6, 64};

namespace detail {

struct Tables {
  std::array<std::uint8_t, 256> sbox{};
  std::array<u32, 256> mul_a{};
  std::array<u32, 256> div_a{};
};

constexpr std::uint8_t rotl8(unsigned x, unsigned s) noexcept { return static_cast<std::uint8_t>(((x << s) | (x >> (8 - s))) & 0xFF); }

constexpr Tables make_tables() {
  Tables t{};
  for (unsigned a = 0; a < 256; ++a) {
    unsigned inv = 0;
    if (a)
      for (unsigned b = 1; b < 256; ++b)
        if (gf256_mul(a, b, kAesPoly) == 1) {
          inv = b;
          break;
        }
    t.sbox[a] = static_cast<std::uint8_t>(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^ rotl8(inv, 4) ^ 0x63);
  }
  std::array<std::uint8_t, 4> m{}, d{};
  for (int i = 0; i < 4; ++i) {
    m[i] = beta_pow(kAlphaPolyExp[i]);
    d[i] = beta_pow(kAlphaInvExp[i]);
  }
  for (unsigned c = 0; c < 256; ++c) {
    t.mul_a[c] = (u32{gf256_mul(c, m[0], kBetaPoly)} << 24) | (u32{gf256_mul(c, m[1], kBetaPoly)} << 16) |
                 (u32{gf256_mul(c, m[2], kBetaPoly)} << 8) | u32{gf256_mul(c, m[3], kBetaPoly)};
    t.div_a[c] = (u32{gf256_mul(c, d[0], kBetaPoly)} << 24) | (u32{gf256_mul(c, d[1], kBetaPoly)} << 16) |
                 (u32{gf256_mul(c, d[2], kBetaPoly)} << 8) | u32{gf256_mul(c, d[3], kBetaPoly)};
  }
  return t;
}

inline const Tables& tables() {
  static const Tables t = make_tables();
  return t;
}

}  // namespace detail

inline std::uint8_t aes_sbox(std::uint8_t x) { return detail::tables().sbox[x]; }

inline u32 mul_alpha(u32 w) { return (w << 8) ^ detail::tables().mul_a[w >> 24]; }
inline u32 div_alpha(u32 w) { return (w >> 8) ^ detail::tables().div_a[w & 0xFF]; }

inline u32 boxplus(u32 x, u32 y) noexcept { return x + y; }

/// S: AES SubBytes on the four bytes followed by the AES MixColumn matrix.
/// Byte 0 is the least significant byte of the word.
inline u32 sbox_s(u32 w) {
  std::uint8_t s[4];
  for (int i = 0; i < 4; ++i) s[i] = aes_sbox(static_cast<std::uint8_t>(w >> (8 * i)));
  auto x2 = [](unsigned a) { return gf256_mul(a, 2, kAesPoly); };
  auto x3 = [](unsigned a) { return gf256_mul(a, 3, kAesPoly); };
  const u32 r0 = x2(s[0]) ^ x3(s[1]) ^ s[2] ^ s[3];
  const u32 r1 = s[0] ^ x2(s[1]) ^ x3(s[2]) ^ s[3];
  const u32 r2 = s[0] ^ s[1] ^ x2(s[2]) ^ x3(s[3]);
  const u32 r3 = x3(s[0]) ^ s[1] ^ s[2] ^ x2(s[3]);
  return r0 | (r1 << 8) | (r2 << 16) | (r3 << 24);
}

struct FsmState {
  u32 r1 = 0;
  u32 r2 = 0;
  friend bool operator==(const FsmState&, const FsmState&) = default;
};

/// F = (d15 + R1) ^ R2, then R1 <- d5 + R2, R2 <- S(R1).
inline u32 fsm_step(FsmState& fsm, u32 d5, u32 d15) {
  const u32 f = boxplus(d15, fsm.r1) ^ fsm.r2;
  const u32 r1 = boxplus(d5, fsm.r2);
  fsm.r2 = sbox_s(fsm.r1);
  fsm.r1 = r1;
  return f;
}

/// 128- or 256-bit key and 128-bit IV, each as 32-bit words in reading order
/// (the first word is the most significant one: k3 / k7 and IV3).
struct Key {
  std::vector<u32> key;
  std::array<u32, 4> iv{};

  void validate() const {
    if (key.size() != 4 && key.size() != 8) throw DomainError("SNOW 2.0 key must be 4 or 8 words (128 or 256 bits)");
  }
};

/// Initial delay-block contents s0..s15 (s0 oldest) from the SNOW 2.0 key/IV load.
inline std::array<u32, 16> load_key(const Key& k) {
  k.validate();
  std::array<u32, 16> s{};
  const u32 iv0 = k.iv[3], iv1 = k.iv[2], iv2 = k.iv[1], iv3 = k.iv[0];
  if (k.key.size() == 4) {
    const u32 k3 = k.key[0], k2 = k.key[1], k1 = k.key[2], k0 = k.key[3];
    s[15] = k3 ^ iv0;
    s[14] = k2;
    s[13] = k1;
    s[12] = k0 ^ iv1;
    s[11] = ~k3;
    s[10] = ~k2 ^ iv2;
    s[9] = ~k1 ^ iv3;
    s[8] = ~k0;
    s[7] = k3;
    s[6] = k2;
    s[5] = k1;
    s[4] = k0;
    s[3] = ~k3;
    s[2] = ~k2;
    s[1] = ~k1;
    s[0] = ~k0;
  } else {
    for (int i = 0; i < 8; ++i) {
      s[15 - i] = k.key[static_cast<std::size_t>(i)];
      s[7 - i] = ~k.key[static_cast<std::size_t>(i)];
    }
    s[15] ^= iv0;
    s[12] ^= iv1;
    s[10] ^= iv2;
    s[9] ^= iv3;
  }
  return s;
}

/// The SNOW 2.0 LFSR over F_{2^32} with table-driven alpha arithmetic:
/// s_{t+16} = alpha^-1 s_{t+11} + s_{t+2} + alpha s_t.
class DirectLfsr {
 public:
  void load(const std::array<u32, 16>& s) {
    s_ = s;
    head_ = 0;
  }
  u32 block(std::size_t i) const noexcept { return s_[(head_ + i) & 15]; }
  u32 feedback() const { return div_alpha(block(11)) ^ block(2) ^ mul_alpha(block(0)); }
  u32 step(u32 extra = 0) {
    const u32 fb = feedback() ^ extra;
    const u32 out = s_[head_];
    s_[head_] = fb;
    head_ = (head_ + 1) & 15;
    return out;
  }

 private:
  std::array<u32, 16> s_{};
  std::size_t head_ = 0;
};

/// Adapter presenting a 32 x 16 FastSigmaLfsr with the DirectLfsr interface.
class SigmaLfsr32 {
 public:
  SigmaLfsr32() = default;
  explicit SigmaLfsr32(const SigmaConfig& cfg) : lfsr_(cfg) {
    if (cfg.m != 32 || cfg.b != 16) throw DimensionError("SigmaLfsr32: configuration must be 32 x 16");
  }
  void load(const std::array<u32, 16>& s) { lfsr_.load(std::vector<std::uint64_t>(s.begin(), s.end())); }
  void reconfigure(const SigmaConfig& cfg) {
    if (cfg.m != 32 || cfg.b != 16) throw DimensionError("reconfigure: configuration must be 32 x 16");
    lfsr_.reconfigure(cfg);
  }
  u32 block(std::size_t i) const noexcept { return static_cast<u32>(lfsr_.block(i)); }
  u32 feedback() const { return static_cast<u32>(lfsr_.feedback()); }
  u32 step(u32 extra = 0) { return static_cast<u32>(lfsr_.step(extra)); }
  std::array<u32, 16> words() const {
    std::array<u32, 16> out{};
    for (std::size_t i = 0; i < 16; ++i) out[i] = block(i);
    return out;
  }

 private:
  FastSigmaLfsr lfsr_;
};

/// LFSR + FSM. One clock computes F from the current state, updates R1/R2,
/// and shifts in the feedback word (with F added in initialization mode).
template <class Lfsr>
class Core {
 public:
  Lfsr& lfsr() noexcept { return lfsr_; }
  const Lfsr& lfsr() const noexcept { return lfsr_; }
  FsmState& fsm() noexcept { return fsm_; }
  const FsmState& fsm() const noexcept { return fsm_; }

  /// z = F ^ s0 for the current state (no clocking).
  u32 output() const { return (boxplus(lfsr_.block(15), fsm_.r1) ^ fsm_.r2) ^ lfsr_.block(0); }

  u32 clock(bool init_mode) {
    const u32 f = fsm_step(fsm_, lfsr_.block(5), lfsr_.block(15));
    lfsr_.step(init_mode ? f : 0);
    return f;
  }

  /// Key/IV load, R1 = R2 = 0, then 32 initialization clocks; returns the F values.
  std::vector<u32> initialize(const Key& k) {
    lfsr_.load(load_key(k));
    fsm_ = {};
    std::vector<u32> fs;
    fs.reserve(kInitClocks);
    for (std::size_t i = 0; i < kInitClocks; ++i) fs.push_back(clock(true));
    return fs;
  }

  /// Emit z and clock, n times.
  std::vector<u32> keystream(std::size_t n) {
    std::vector<u32> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(output());
      clock(false);
    }
    return out;
  }

 private:
  Lfsr lfsr_;
  FsmState fsm_;
};

/// Reference SNOW 2.0: initialization, then one plain clock before the first output word.
class Cipher {
 public:
  explicit Cipher(const Key& k) {
    core_.initialize(k);
    core_.clock(false);
  }
  std::vector<u32> keystream(std::size_t n) { return core_.keystream(n); }
  Core<DirectLfsr>& core() noexcept { return core_; }

 private:
  Core<DirectLfsr> core_;
};

inline std::vector<u32> keystream(const Key& k, std::size_t n) { return Cipher(k).keystream(n); }

// ---------------------------------------------------------------------------
// Bit-matrix view of the LFSR.

/// 8x8 matrix (column action) of multiplication by c in F_2[beta]/H_S.
inline BitMatrix byte_mul_matrix(std::uint8_t c) {
  BitMatrix m(8, 8);
  for (unsigned j = 0; j < 8; ++j) {
    const std::uint8_t col = gf256_mul(c, 1U << j, kBetaPoly);
    for (unsigned r = 0; r < 8; ++r)
      if ((col >> r) & 1U) m.set(r, j);
  }
  return m;
}

/// 32x32 matrices (column action, bit i of a word = coordinate i) of
/// multiplication by alpha and alpha^-1 in F_{2^8}[x]/G_S, where byte k of a
/// word holds the coefficient of alpha^k. Multiplying by alpha sends
/// a3 a^3 + a2 a^2 + a1 a + a0 to (a2 + g3 a3) a^3 + (a1 + g2 a3) a^2 + (a0 + g1 a3) a + g0 a3
/// with G_S = x^4 + g3 x^3 + g2 x^2 + g1 x + g0.
inline std::pair<BitMatrix, BitMatrix> build_alpha_matrices() {
  BitMatrix a(32, 32);
  const BitMatrix id8 = BitMatrix::identity(8);
  for (std::size_t k = 1; k < 4; ++k) a.set_block(8 * k, 8 * (k - 1), id8);
  // g3..g0 = beta^23, beta^245, beta^48, beta^239 feed from byte 3 into bytes 3..0.
  for (std::size_t k = 0; k < 4; ++k) a.set_block(8 * (3 - k), 24, byte_mul_matrix(beta_pow(kAlphaPolyExp[k])));
  BitMatrix inv = gf2::mat_inverse(a);
  return {std::move(a), std::move(inv)};
}

inline constexpr std::size_t kWordBits = 32;
inline constexpr std::size_t kBlocks = 16;

/// B_0 = alpha, B_2 = I, B_11 = alpha^-1, all other gains zero.
inline SigmaConfig snow2_gains() {
  auto [a, ainv] = build_alpha_matrices();
  SigmaConfig cfg{kWordBits, kBlocks, std::vector<BitMatrix>(kBlocks, BitMatrix(kWordBits, kWordBits))};
  cfg.gains[0] = a;
  cfg.gains[2] = BitMatrix::identity(kWordBits);
  cfg.gains[11] = ainv;
  return cfg;
}

/// f(x): the degree-512 characteristic polynomial of the SNOW 2.0 LFSR.
inline gf2::Gf2Poly snow2_char_poly_reference() {
  static const int exps[] = {
      512, 510, 504, 502, 501, 494, 493, 490, 486, 485, 483, 481, 480, 478, 477, 471, 470, 469, 466, 462, 461, 459, 458, 452,
      449, 446, 445, 444, 441, 438, 437, 434, 433, 432, 431, 429, 427, 424, 423, 420, 419, 414, 412, 411, 409, 405, 402, 400,
      399, 398, 396, 395, 393, 392, 390, 388, 387, 385, 375, 374, 372, 371, 366, 365, 363, 362, 359, 357, 356, 355, 354, 353,
      352, 351, 350, 347, 345, 344, 343, 341, 339, 338, 337, 336, 333, 330, 329, 326, 324, 322, 319, 310, 307, 306, 305, 304,
      303, 301, 299, 298, 297, 296, 295, 294, 293, 292, 291, 289, 286, 285, 283, 282, 281, 278, 276, 274, 271, 269, 264, 262,
      259, 258, 257, 255, 253, 251, 249, 248, 243, 240, 239, 238, 236, 235, 233, 232, 230, 229, 228, 227, 226, 222, 217, 216,
      215, 214, 213, 210, 208, 206, 203, 201, 199, 193, 190, 184, 179, 178, 177, 175, 174, 173, 172, 171, 169, 165, 164, 163,
      158, 156, 155, 153, 152, 151, 149, 147, 146, 143, 141, 138, 136, 132, 131, 129, 128, 126, 125, 124, 123, 121, 120, 119,
      118, 117, 116, 115, 113, 112, 111, 109, 105, 104, 103, 102, 98,  97,  94,  93,  89,  88,  87,  81,  78,  76,  75,  73,
      72,  70,  69,  68,  67,  66,  65,  63,  59,  58,  57,  56,  55,  53,  51,  50,  49,  47,  46,  45,  44,  41,  39,  37,
      36,  33,  30,  26,  25,  21,  20,  19,  16,  5,   0};
  return gf2::Gf2Poly::from_exponents(std::span<const int>(exps, std::size(exps)));
}

}  // namespace kdfc::snow2
