#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kdfc/error.hpp"

namespace kdfc::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

/// Mask of the valid bits in the last word of a `bits`-long packed row.
constexpr Word tail_mask(std::size_t bits) noexcept {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

namespace detail {

inline char hex_digit(unsigned v) { return "0123456789abcdef"[v & 0xF]; }

inline unsigned hex_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
  if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
  throw FormatError(std::string("invalid hex digit '") + c + "'");
}

// Packed bits -> hex, digit k holds bits 4k..4k+3 (least significant digit first).
inline std::string words_to_hex(std::span<const Word> words, std::size_t bits) {
  std::string out((bits + 3) / 4, '0');
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t bit = 4 * k;
    out[k] = hex_digit(static_cast<unsigned>(words[bit / kWordBits] >> (bit % kWordBits)));
  }
  return out;
}

inline void hex_to_words(std::string_view hex, std::size_t bits, std::span<Word> words) {
  if (hex.size() != (bits + 3) / 4) throw FormatError("hex row has wrong length for " + std::to_string(bits) + " bits");
  for (auto& w : words) w = 0;
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const std::size_t bit = 4 * k;
    words[bit / kWordBits] |= Word{hex_value(hex[k])} << (bit % kWordBits);
  }
  if (!words.empty() && (words.back() & ~tail_mask(bits)) != 0)
    throw FormatError("hex row sets bits beyond its length");
}

}  // namespace detail

/// Dense vector over GF(2). Coordinate i lives in word i/64, bit i%64.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

  static BitVector from_bits(std::span<const std::uint8_t> bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i] & 1) v.set(i);
    return v;
  }

  /// Low `len` bits of `value` (len <= 64).
  static BitVector from_word(Word value, std::size_t len) {
    BitVector v(len);
    if (len > 0) v.words_[0] = value & tail_mask(std::min<std::size_t>(len, kWordBits));
    return v;
  }

  /// Vector with a single one in the last coordinate, i.e. (0, ..., 0, 1).
  static BitVector unit_last(std::size_t len) {
    BitVector v(len);
    if (len > 0) v.set(len - 1);
    return v;
  }

  static BitVector from_hex(std::string_view hex, std::size_t len) {
    BitVector v(len);
    detail::hex_to_words(hex, len, v.words_);
    return v;
  }

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return get(i); }
  void set(std::size_t i, bool value = true) noexcept {
    const Word bit = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  /// First `len` bits packed into one word (len <= 64).
  Word to_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool is_zero() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  std::size_t popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Inner product over GF(2).
  bool dot(const BitVector& other) const {
    if (other.len_ != len_) throw DimensionError("dot: length mismatch");
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
  }

  BitVector& operator^=(const BitVector& other) {
    if (other.len_ != len_) throw DimensionError("xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Copy with one extra coordinate appended at the end.
  BitVector appended(bool bit) const {
    BitVector out(len_ + 1);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i];
    out.set(len_, bit);
    return out;
  }

  std::string to_hex() const { return detail::words_to_hex(words_, len_); }

  /// Bits as a '0'/'1' string, coordinate 0 first.
  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

}  // namespace kdfc::gf2
