#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kdfc/error.hpp"

namespace kdfc::symbolic {

inline constexpr std::size_t kMaxVars = 128;

/// Product of distinct variables, as a 128-bit set (bit k = variable k, 0-based).
struct Monomial {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static Monomial var(std::size_t k) {
    if (k >= kMaxVars) throw DomainError("Monomial: variable index beyond 128");
    Monomial m;
    (k < 64 ? m.lo : m.hi) |= std::uint64_t{1} << (k % 64);
    return m;
  }

  int degree() const noexcept { return std::popcount(lo) + std::popcount(hi); }
  bool has(std::size_t k) const noexcept { return ((k < 64 ? lo : hi) >> (k % 64)) & 1U; }

  std::vector<std::size_t> vars() const {
    std::vector<std::size_t> out;
    for (std::uint64_t w = lo; w; w &= w - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
    for (std::uint64_t w = hi; w; w &= w - 1) out.push_back(64 + static_cast<std::size_t>(std::countr_zero(w)));
    return out;
  }

  friend Monomial operator|(Monomial a, Monomial b) noexcept { return {a.lo | b.lo, a.hi | b.hi}; }
  friend bool operator==(Monomial a, Monomial b) noexcept = default;
  friend bool operator<(Monomial a, Monomial b) noexcept { return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo; }
};

/// Boolean polynomial in algebraic normal form: a set of monomials kept as a
/// sorted vector (the empty monomial is the constant 1). Addition is symmetric
/// difference; multiplication unions monomials and cancels pairs.
class AnfPoly {
 public:
  static constexpr int kZeroDegree = -1;

  AnfPoly() = default;

  static AnfPoly zero() { return {}; }
  static AnfPoly one() { return constant(true); }
  static AnfPoly constant(bool c) {
    AnfPoly p;
    if (c) p.terms_.push_back(Monomial{});
    return p;
  }
  static AnfPoly var(std::size_t k) {
    AnfPoly p;
    p.terms_.push_back(Monomial::var(k));
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0] == Monomial{}; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }

  /// Largest monomial size; kZeroDegree (-1) stands in for minus infinity.
  int degree() const noexcept {
    int d = kZeroDegree;
    for (const auto& m : terms_) d = std::max(d, m.degree());
    return d;
  }

  AnfPoly& operator+=(const AnfPoly& o) {
    std::vector<Monomial> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
  }
  friend AnfPoly operator+(AnfPoly a, const AnfPoly& b) { return a += b; }

  friend AnfPoly operator*(const AnfPoly& a, const AnfPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    std::vector<Monomial> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) prod.push_back(x | y);
    return from_unsorted(std::move(prod));
  }
  AnfPoly& operator*=(const AnfPoly& o) { return *this = *this * o; }

  /// Value under an assignment (bit k of the assignment = variable k).
  bool evaluate(const std::vector<std::uint8_t>& assignment) const {
    bool acc = false;
    for (const auto& m : terms_) {
      bool t = true;
      for (std::size_t k : m.vars())
        if (k >= assignment.size() || !assignment[k]) {
          t = false;
          break;
        }
      acc ^= t;
    }
    return acc;
  }

  /// Terms in lexicographic order of their ascending variable lists, printed
  /// with 1-based names: "x1 x3 x5 x8 + x2 x5 + 1".
  std::string to_string(const std::string& prefix = "x") const {
    if (is_zero()) return "0";
    std::vector<std::vector<std::size_t>> ms;
    for (const auto& m : terms_) ms.push_back(m.vars());
    std::sort(ms.begin(), ms.end(), [](const auto& a, const auto& b) {
      if (a.empty() != b.empty()) return b.empty();
      return a < b;
    });
    std::string s;
    for (const auto& m : ms) {
      if (!s.empty()) s += " + ";
      if (m.empty()) {
        s += "1";
        continue;
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ' ';
        s += prefix + std::to_string(m[i] + 1);
      }
    }
    return s;
  }

  friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

 private:
  static AnfPoly from_unsorted(std::vector<Monomial> v) {
    std::sort(v.begin(), v.end());
    AnfPoly p;
    p.terms_.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if ((j - i) & 1U) p.terms_.push_back(v[i]);
      i = j;
    }
    return p;
  }

  std::vector<Monomial> terms_;
};

}  // namespace kdfc::symbolic
