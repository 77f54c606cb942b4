#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kdfc/gf2/bit_vector.hpp"

namespace kdfc::gf2 {

/// Dense row-major matrix over GF(2); each row is packed like a BitVector.
/// Vectors act from the left: v -> v * M.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BitMatrix from_rows(std::span<const BitVector> rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  /// Rows given as 0/1 integer lists; convenient in tests.
  static BitMatrix from_lists(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    BitMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw DimensionError("from_lists: ragged rows");
      std::size_t c = 0;
      for (int v : row) m.set(r, c++, v & 1);
      ++r;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  bool operator()(std::size_t r, std::size_t c) const noexcept { return get(r, c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    if (value)
      w |= bit;
    else
      w &= ~bit;
  }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<Word> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row_words(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

  BitVector row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = src[i];
    return v;
  }

  BitVector col(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, c)) v.set(r);
    return v;
  }

  void set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
    auto dst = row_words(r);
    auto src = v.words();
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = src[i];
  }

  /// row[dst] ^= row[src]
  void xor_row(std::size_t dst, std::size_t src) noexcept {
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
  }

  void swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    Word* pa = data_.data() + a * stride_;
    Word* pb = data_.data() + b * stride_;
    for (std::size_t i = 0; i < stride_; ++i) std::swap(pa[i], pb[i]);
  }

  bool row_is_zero(std::size_t r) const noexcept {
    for (Word w : row_words(r))
      if (w) return false;
    return true;
  }

  bool is_zero() const noexcept {
    for (Word w : data_)
      if (w) return false;
    return true;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  /// Rectangular window copy [r0, r0+nr) x [c0, c0+nc).
  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block: window outside matrix");
    BitMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c)
        if (get(r0 + r, c0 + c)) b.set(r, c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("set_block: window outside matrix");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) set(r0 + r, c0 + c, b.get(r, c));
  }

  std::vector<std::string> hex_rows() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(detail::words_to_hex(row_words(r), cols_));
    return out;
  }

  static BitMatrix from_hex_rows(std::size_t rows, std::size_t cols, std::span<const std::string> hex) {
    if (hex.size() != rows) throw FormatError("hex row count does not match 'rows'");
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) detail::hex_to_words(hex[r], cols, m.row_words(r));
    return m;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace kdfc::gf2
