#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/bit_matrix.hpp"
#include "kdfc/gf2/bit_vector.hpp"
#include "kdfc/gf2/linalg.hpp"

namespace kdfc {

using gf2::BitMatrix;
using gf2::BitVector;

/// Feedback configuration of an m-input m-output, b-block sigma-LFSR.
///
/// Gains act on words as column vectors: the new word is
/// x_{n+b} = B_0 x_n + B_1 x_{n+1} + ... + B_{b-1} x_{n+b-1}.
/// The configuration matrix is then the M-companion matrix with identity
/// super-diagonal blocks and (B_0 ... B_{b-1}) as its last block-row, and one
/// step maps the stacked column state s = (x_n; ...; x_{n+b-1}) to C s.
struct SigmaConfig {
  std::size_t m = 0;
  std::size_t b = 0;
  std::vector<BitMatrix> gains;

  void validate() const {
    if (m == 0 || b == 0) throw DimensionError("SigmaConfig: m and b must be positive");
    if (gains.size() != b) throw DimensionError("SigmaConfig: expected b gain matrices");
    for (const auto& g : gains)
      if (g.rows() != m || g.cols() != m) throw DimensionError("SigmaConfig: gain matrices must be m x m");
  }

  friend bool operator==(const SigmaConfig&, const SigmaConfig&) = default;
};

/// Delay-block contents x_n .. x_{n+b-1}; blocks[0] is the oldest word.
struct LfsrState {
  std::vector<BitVector> blocks;

  static LfsrState zero(std::size_t m, std::size_t b) { return LfsrState{std::vector<BitVector>(b, BitVector(m))}; }

  /// Split a stacked mb-bit vector into b words (word i = coordinates im..im+m-1).
  static LfsrState from_stacked(const BitVector& s, std::size_t m) {
    if (m == 0 || s.size() % m) throw DimensionError("from_stacked: length not a multiple of m");
    LfsrState st;
    for (std::size_t i = 0; i < s.size() / m; ++i) {
      BitVector w(m);
      for (std::size_t j = 0; j < m; ++j)
        if (s.get(i * m + j)) w.set(j);
      st.blocks.push_back(std::move(w));
    }
    return st;
  }

  BitVector stacked() const {
    const std::size_t m = blocks.empty() ? 0 : blocks[0].size();
    BitVector s(m * blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (blocks[i].get(j)) s.set(i * m + j);
    return s;
  }

  bool is_zero() const {
    for (const auto& w : blocks)
      if (!w.is_zero()) return false;
    return true;
  }

  friend bool operator==(const LfsrState&, const LfsrState&) = default;
};

/// B x for a word x viewed as a column vector.
inline BitVector apply_gain(const BitMatrix& gain, const BitVector& x) {
  if (gain.cols() != x.size()) throw DimensionError("apply_gain: width mismatch");
  BitVector out(gain.rows());
  for (std::size_t r = 0; r < gain.rows(); ++r)
    if (gain.row(r).dot(x)) out.set(r);
  return out;
}

inline BitMatrix build_config_matrix(const SigmaConfig& cfg) {
  cfg.validate();
  const std::size_t m = cfg.m, b = cfg.b, n = m * b;
  BitMatrix c(n, n);
  for (std::size_t i = 0; i + m < n; ++i) c.set(i, i + m);
  for (std::size_t j = 0; j < b; ++j) c.set_block(n - m, j * m, cfg.gains[j]);
  return c;
}

/// Reads the gains from the last m rows, checking the M-companion shape of the rest.
inline SigmaConfig extract_config(const BitMatrix& c, std::size_t m) {
  if (!c.is_square() || m == 0 || c.rows() % m) throw DimensionError("extract_config: need square matrix with size divisible by m");
  const std::size_t n = c.rows();
  for (std::size_t i = 0; i + m < n; ++i) {
    BitVector want(n);
    want.set(i + m);
    if (!(c.row(i) == want))
      throw NotMCompanionError("extract_config: row " + std::to_string(i) + " is not the expected shift row");
  }
  SigmaConfig cfg{m, n / m, {}};
  for (std::size_t j = 0; j < cfg.b; ++j) cfg.gains.push_back(c.block(n - m, j * m, m, m));
  return cfg;
}

inline bool is_m_companion(const BitMatrix& c, std::size_t m) {
  try {
    extract_config(c, m);
    return true;
  } catch (const NotMCompanionError&) {
    return false;
  }
}

/// One clock: returns the oldest word and shifts in the feedback word.
inline BitVector lfsr_step(const SigmaConfig& cfg, LfsrState& s) {
  if (s.blocks.size() != cfg.b) throw DimensionError("lfsr_step: state has wrong block count");
  BitVector fb(cfg.m);
  for (std::size_t i = 0; i < cfg.b; ++i) {
    if (s.blocks[i].size() != cfg.m) throw DimensionError("lfsr_step: state word has wrong width");
    fb ^= apply_gain(cfg.gains[i], s.blocks[i]);
  }
  BitVector out = std::move(s.blocks[0]);
  for (std::size_t i = 0; i + 1 < cfg.b; ++i) s.blocks[i] = std::move(s.blocks[i + 1]);
  s.blocks[cfg.b - 1] = std::move(fb);
  return out;
}

/// Checks that one lfsr_step equals multiplication of the stacked state by the
/// configuration matrix (column action C s, i.e. s * C^T as a row vector).
inline bool state_vector_equiv(const SigmaConfig& cfg, const LfsrState& s) {
  const BitMatrix ct = build_config_matrix(cfg).transposed();
  const BitVector want = gf2::vec_mat(s.stacked(), ct);
  LfsrState t = s;
  lfsr_step(cfg, t);
  return t.stacked() == want;
}

inline constexpr std::size_t kMaxPeriodBits = 24;

/// Least t > 0 with state(t) = state(0). Guarded to mb <= 24.
inline std::uint64_t period(const SigmaConfig& cfg, const LfsrState& s0) {
  cfg.validate();
  if (cfg.m * cfg.b > kMaxPeriodBits) throw DomainError("period: mb exceeds the 24-bit guard");
  if (s0.is_zero()) throw DomainError("period: seed must be nonzero");
  const std::uint64_t limit = std::uint64_t{1} << (cfg.m * cfg.b);
  LfsrState s = s0;
  for (std::uint64_t t = 1; t <= limit; ++t) {
    lfsr_step(cfg, s);
    if (s == s0) return t;
  }
  throw InvariantError("period: state did not recur");
}

/// Cycle lengths of the state map over all 2^mb states (zero state included),
/// as (length, number of cycles) pairs sorted by length. Guarded to mb <= 24.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_structure(const SigmaConfig& cfg);

/// Word-level sigma-LFSR for m <= 64. The state is a ring of b machine words and
/// each gain is expanded into byte lookup tables (XOR of the gain columns selected
/// by one byte of the input word), so a clock costs b * ceil(m/8) table loads.
class FastSigmaLfsr {
 public:
  using Word = std::uint64_t;

  FastSigmaLfsr() = default;
  explicit FastSigmaLfsr(const SigmaConfig& cfg) { reconfigure(cfg); }

  /// Replace the gains; the delay-block contents are kept.
  void reconfigure(const SigmaConfig& cfg) {
    cfg.validate();
    if (cfg.m > 64) throw DomainError("FastSigmaLfsr: m must be <= 64");
    if (m_ != 0 && (cfg.m != m_ || cfg.b != b_)) throw DimensionError("reconfigure: dimensions differ from the running state");
    m_ = cfg.m;
    b_ = cfg.b;
    bytes_ = (m_ + 7) / 8;
    mask_ = m_ == 64 ? ~Word{0} : (Word{1} << m_) - 1;
    if (ring_.size() != b_) {
      ring_.assign(b_, 0);
      head_ = 0;
    }
    tables_.assign(b_ * bytes_ * 256, 0);
    active_.clear();
    for (std::size_t i = 0; i < b_; ++i) {
      std::vector<Word> cols(m_, 0);
      for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = 0; c < m_; ++c)
          if (cfg.gains[i].get(r, c)) cols[c] |= Word{1} << r;
      const bool any = std::any_of(cols.begin(), cols.end(), [](Word w) { return w != 0; });
      for (std::size_t k = 0; k < bytes_; ++k) {
        Word* t = &tables_[(i * bytes_ + k) * 256];
        for (std::size_t v = 1; v < 256; ++v) {
          const std::size_t low = static_cast<std::size_t>(std::countr_zero(v));
          const std::size_t col = 8 * k + low;
          t[v] = t[v & (v - 1)] ^ (col < m_ ? cols[col] : 0);
        }
      }
      if (any) active_.push_back(i);
    }
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t b() const noexcept { return b_; }

  /// Word in delay block i (0 = oldest).
  Word block(std::size_t i) const noexcept { return ring_[(head_ + i) % b_]; }
  void set_block(std::size_t i, Word w) noexcept { ring_[(head_ + i) % b_] = w & mask_; }

  void load(const std::vector<Word>& words) {
    if (words.size() != b_) throw DimensionError("FastSigmaLfsr::load: expected b words");
    head_ = 0;
    for (std::size_t i = 0; i < b_; ++i) ring_[i] = words[i] & mask_;
  }

  std::vector<Word> words() const {
    std::vector<Word> out(b_);
    for (std::size_t i = 0; i < b_; ++i) out[i] = block(i);
    return out;
  }

  /// Feedback word B_0 x_n + ... + B_{b-1} x_{n+b-1} for the current state.
  Word feedback() const noexcept {
    Word acc = 0;
    for (std::size_t i : active_) {
      Word x = block(i);
      const Word* t = &tables_[i * bytes_ * 256];
      for (std::size_t k = 0; k < bytes_; ++k, x >>= 8, t += 256) acc ^= t[x & 0xFF];
    }
    return acc;
  }

  /// Shift in `extra ^ feedback()` and return the word that left block 0.
  Word step(Word extra = 0) noexcept {
    const Word fb = (feedback() ^ extra) & mask_;
    const Word out = ring_[head_];
    ring_[head_] = fb;
    head_ = (head_ + 1) % b_;
    return out;
  }

 private:
  std::size_t m_ = 0;
  std::size_t b_ = 0;
  std::size_t bytes_ = 0;
  Word mask_ = 0;
  std::vector<Word> ring_;
  std::size_t head_ = 0;
  std::vector<Word> tables_;
  std::vector<std::size_t> active_;
};

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_structure(const SigmaConfig& cfg) {
  cfg.validate();
  const std::size_t m = cfg.m, b = cfg.b;
  if (m * b > kMaxPeriodBits) throw DomainError("cycle_structure: mb exceeds the 24-bit guard");
  const std::uint64_t states = std::uint64_t{1} << (m * b);
  const std::uint64_t word_mask = (std::uint64_t{1} << m) - 1;
  FastSigmaLfsr l(cfg);
  std::vector<std::uint8_t> seen(states, 0);
  std::vector<FastSigmaLfsr::Word> words(b);
  std::map<std::uint64_t, std::uint64_t> lengths;
  for (std::uint64_t start = 0; start < states; ++start) {
    if (seen[start]) continue;
    for (std::size_t i = 0; i < b; ++i) words[i] = (start >> (i * m)) & word_mask;
    l.load(words);
    std::uint64_t len = 0, cur = start;
    do {
      seen[cur] = 1;
      l.step();
      cur = 0;
      for (std::size_t i = 0; i < b; ++i) cur |= l.block(i) << (i * m);
      ++len;
      if (len > states) throw InvariantError("cycle_structure: state map is not a permutation");
    } while (cur != start);
    ++lengths[len];
  }
  return {lengths.begin(), lengths.end()};
}

}  // namespace kdfc
