#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/bit_vector.hpp"

namespace kdfc::gf2 {

/// Univariate polynomial over GF(2); bit i of the packed storage is the coefficient of x^i.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly from_word(Word bits) {
    Gf2Poly p;
    p.c_.push_back(bits);
    p.trim();
    return p;
  }

  static Gf2Poly monomial(std::size_t k) {
    Gf2Poly p;
    p.c_.assign(k / kWordBits + 1, 0);
    p.c_.back() = Word{1} << (k % kWordBits);
    return p;
  }

  static Gf2Poly one() { return from_word(1); }
  static Gf2Poly x() { return from_word(2); }

  static Gf2Poly from_exponents(std::span<const int> exps) {
    Gf2Poly p;
    for (int e : exps) {
      if (e < 0) throw DomainError("negative exponent");
      p.flip(static_cast<std::size_t>(e));
    }
    return p;
  }
  static Gf2Poly from_exponents(std::initializer_list<int> exps) {
    return from_exponents(std::span<const int>(exps.begin(), exps.size()));
  }

  /// Parses "e1,e2,...,ek" (any order, whitespace tolerated).
  static Gf2Poly parse_exponents(std::string_view text) {
    std::vector<int> exps;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i >= text.size()) break;
      if (text[i] < '0' || text[i] > '9') throw FormatError("bad exponent list: '" + std::string(text) + "'");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      exps.push_back(v);
    }
    return from_exponents(exps);
  }

  /// Coefficients c_0..c_{n-1} of a length-n vector, i.e. sum v_i x^i.
  static Gf2Poly from_bitvector(const BitVector& v) {
    Gf2Poly p;
    p.c_.assign(v.words().begin(), v.words().end());
    p.trim();
    return p;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept {
    if (c_.empty()) return -1;
    return static_cast<int>((c_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(c_.back())));
  }

  bool coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kWordBits;
    return w < c_.size() && ((c_[w] >> (i % kWordBits)) & 1U);
  }

  void set_coeff(std::size_t i, bool value) {
    if (coeff(i) != value) flip(i);
  }

  void flip(std::size_t i) {
    const std::size_t w = i / kWordBits;
    if (w >= c_.size()) c_.resize(w + 1, 0);
    c_[w] ^= Word{1} << (i % kWordBits);
    trim();
  }

  std::span<const Word> words() const noexcept { return c_; }

  /// Number of nonzero coefficients.
  std::size_t weight() const noexcept {
    std::size_t n = 0;
    for (Word w : c_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Exponents with nonzero coefficient, highest first.
  std::vector<int> exponents() const {
    std::vector<int> out;
    for (int i = degree(); i >= 0; --i)
      if (coeff(static_cast<std::size_t>(i))) out.push_back(i);
    return out;
  }

  /// Coefficients c_0..c_{n-1} as a length-n vector.
  BitVector low_coeffs(std::size_t n) const {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coeff(i)) v.set(i);
    return v;
  }

  std::string exponent_list() const {
    std::string s;
    for (int e : exponents()) {
      if (!s.empty()) s += ',';
      s += std::to_string(e);
    }
    return s;
  }

  /// Human form, e.g. "x^4 + x + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e : exponents()) {
      if (!s.empty()) s += " + ";
      if (e == 0)
        s += "1";
      else if (e == 1)
        s += "x";
      else
        s += "x^" + std::to_string(e);
    }
    return s;
  }

  Gf2Poly& operator+=(const Gf2Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
    trim();
    return *this;
  }
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Gf2Poly r;
    r.c_.assign(a.c_.size() + b.c_.size(), 0);
    for (std::size_t wi = 0; wi < a.c_.size(); ++wi) {
      Word w = a.c_[wi];
      while (w) {
        const int bit = std::countr_zero(w);
        w &= w - 1;
        xor_shifted(r.c_, b.c_, wi * kWordBits + static_cast<std::size_t>(bit));
      }
    }
    r.trim();
    return r;
  }
  Gf2Poly& operator*=(const Gf2Poly& o) { return *this = *this * o; }

  /// x^deg * a(1/x).
  Gf2Poly reciprocal() const {
    Gf2Poly r;
    const int d = degree();
    for (int e : exponents()) r.set_coeff(static_cast<std::size_t>(d - e), true);
    return r;
  }

  /// a(x)^2: over GF(2) squaring just spreads the coefficient bits.
  Gf2Poly squared() const {
    Gf2Poly r;
    r.c_.assign(2 * c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r.c_[2 * i] = spread(static_cast<std::uint32_t>(c_[i]));
      r.c_[2 * i + 1] = spread(static_cast<std::uint32_t>(c_[i] >> 32));
    }
    r.trim();
    return r;
  }

  /// Quotient and remainder; throws DomainError on division by zero.
  friend std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Gf2Poly rem = a;
    Gf2Poly quot;
    const int db = b.degree();
    for (int i = rem.degree(); i >= db; --i) {
      if (!rem.coeff(static_cast<std::size_t>(i))) continue;
      const auto shift = static_cast<std::size_t>(i - db);
      xor_shifted(rem.c_, b.c_, shift);
      quot.flip(shift);
    }
    rem.trim();
    return {quot, rem};
  }

  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Gf2Poly rem = a;
    rem.reduce(b);
    return rem;
  }
  friend Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).first; }

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

 private:
  friend Gf2Poly mulmod(const Gf2Poly&, const Gf2Poly&, const Gf2Poly&);
  friend Gf2Poly sqrmod(const Gf2Poly&, const Gf2Poly&);

  static Word spread(std::uint32_t v) noexcept {
    Word x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & 0x5555555555555555ULL;
    return x;
  }

  // dst ^= src << shift, growing dst as needed.
  static void xor_shifted(std::vector<Word>& dst, const std::vector<Word>& src, std::size_t shift) {
    const std::size_t ws = shift / kWordBits;
    const unsigned bs = shift % kWordBits;
    const std::size_t need = src.size() + ws + 1;
    if (dst.size() < need) dst.resize(need, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i + ws] ^= src[i] << bs;
      if (bs) dst[i + ws + 1] ^= src[i] >> (kWordBits - bs);
    }
  }

  void reduce(const Gf2Poly& m) {
    const int dm = m.degree();
    for (int i = degree(); i >= dm; --i)
      if (coeff(static_cast<std::size_t>(i))) xor_shifted(c_, m.c_, static_cast<std::size_t>(i - dm));
    trim();
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Word> c_;
};

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
  Gf2Poly r = a * b;
  r.reduce(m);
  return r;
}

inline Gf2Poly sqrmod(const Gf2Poly& a, const Gf2Poly& m) {
  Gf2Poly r = a.squared();
  r.reduce(m);
  return r;
}

/// base^e mod m, exponent given as packed little-endian bits.
inline Gf2Poly powmod_bits(const Gf2Poly& base, std::span<const Word> exponent, const Gf2Poly& m) {
  if (m.is_zero()) throw DomainError("powmod: zero modulus");
  Gf2Poly result = Gf2Poly::one() % m;
  const Gf2Poly b = base % m;
  std::size_t top = exponent.size() * kWordBits;
  while (top > 0 && !((exponent[(top - 1) / kWordBits] >> ((top - 1) % kWordBits)) & 1U)) --top;
  for (std::size_t i = top; i-- > 0;) {
    result = sqrmod(result, m);
    if ((exponent[i / kWordBits] >> (i % kWordBits)) & 1U) result = mulmod(result, b, m);
  }
  return result;
}

inline Gf2Poly powmod(const Gf2Poly& base, std::uint64_t e, const Gf2Poly& m) {
  const Word w[1] = {e};
  return powmod_bits(base, w, m);
}

/// x^(2^k) mod m by k repeated squarings.
inline Gf2Poly x_pow_2k_mod(std::size_t k, const Gf2Poly& m) {
  Gf2Poly r = Gf2Poly::x() % m;
  for (std::size_t i = 0; i < k; ++i) r = sqrmod(r, m);
  return r;
}

}  // namespace kdfc::gf2
