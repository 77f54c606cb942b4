#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/bit_matrix.hpp"
#include "kdfc/gf2/bit_vector.hpp"
#include "kdfc/gf2/poly.hpp"

namespace kdfc::gf2 {

/// v * M (row vector times matrix): XOR of the rows of M selected by v.
inline BitVector vec_mat(const BitVector& v, const BitMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vec_mat: vector length != matrix rows");
  BitVector out(m.cols());
  auto acc = out.words();
  const auto vw = v.words();
  for (std::size_t wi = 0; wi < vw.size(); ++wi) {
    Word w = vw[wi];
    while (w) {
      const std::size_t r = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      const auto row = m.row_words(r);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= row[i];
    }
  }
  return out;
}

inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: a.cols != b.rows");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row_words(r);
    const auto src = a.row_words(r);
    for (std::size_t wi = 0; wi < src.size(); ++wi) {
      Word w = src[wi];
      while (w) {
        const std::size_t k = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        const auto brow = b.row_words(k);
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= brow[i];
      }
    }
  }
  return out;
}

inline BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: shape mismatch");
  BitMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto d = out.row_words(r);
    const auto s = b.row_words(r);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] ^= s[i];
  }
  return out;
}

inline BitMatrix mat_pow(BitMatrix a, std::uint64_t e) {
  if (!a.is_square()) throw DimensionError("mat_pow: matrix not square");
  BitMatrix result = BitMatrix::identity(a.rows());
  while (e) {
    if (e & 1) result = mat_mul(result, a);
    e >>= 1;
    if (e) a = mat_mul(a, a);
  }
  return result;
}

/// GF(2) row rank.
inline std::size_t rank(BitMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i)
      if (a.get(i, c)) a.xor_row(i, r);
    ++r;
  }
  return r;
}

inline bool determinant(const BitMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix not square");
  return rank(a) == a.rows();
}

/// Inverse by Gauss-Jordan elimination; SingularMatrixError when rank-deficient.
inline BitMatrix mat_inverse(const BitMatrix& a) {
  if (!a.is_square()) throw DimensionError("mat_inverse: matrix not square");
  const std::size_t n = a.rows();
  BitMatrix m = a;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !m.get(p, c)) ++p;
    if (p == n) throw SingularMatrixError("mat_inverse: matrix is singular");
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c && m.get(i, c)) {
        m.xor_row(i, c);
        inv.xor_row(i, c);
      }
    }
  }
  return inv;
}

/// Finds y with y * m = v. Pivots are taken in order (first nonzero row) and
/// free variables are set to 0. Throws NoSolutionError when v is not in the row space.
inline BitVector solve_row(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw DimensionError("solve_row: vector length != matrix cols");
  const std::size_t unknowns = m.rows();
  const std::size_t eqs = m.cols();
  // Equation j: sum_i y_i m[i][j] = v_j, i.e. the transposed system with v appended as last column.
  BitMatrix t(eqs, unknowns + 1);
  for (std::size_t i = 0; i < unknowns; ++i)
    for (std::size_t j = 0; j < eqs; ++j)
      if (m.get(i, j)) t.set(j, i);
  for (std::size_t j = 0; j < eqs; ++j)
    if (v.get(j)) t.set(j, unknowns);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < eqs; ++c) {
    std::size_t p = r;
    while (p < eqs && !t.get(p, c)) ++p;
    if (p == eqs) continue;
    t.swap_rows(r, p);
    for (std::size_t i = 0; i < eqs; ++i)
      if (i != r && t.get(i, c)) t.xor_row(i, r);
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < eqs; ++i)
    if (t.get(i, unknowns)) throw NoSolutionError("solve_row: vector is not in the row space");
  BitVector y(unknowns);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    if (t.get(i, unknowns)) y.set(pivot_cols[i]);
  return y;
}

/// Companion matrix of a monic p of degree n: ones on the subdiagonal and
/// the last column holding c_0..c_{n-1}, so (x_0..x_{n-1}) * P = (x_1..x_n).
inline BitMatrix companion_matrix(const Gf2Poly& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("companion_matrix: degree must be >= 1");
  const auto un = static_cast<std::size_t>(n);
  BitMatrix c(un, un);
  for (std::size_t j = 0; j + 1 < un; ++j) c.set(j + 1, j);
  for (std::size_t j = 0; j < un; ++j)
    if (p.coeff(j)) c.set(j, un - 1);
  return c;
}

/// Rows c, c*a, ..., c*a^(k-1).
inline BitMatrix krylov_matrix(const BitVector& c, const BitMatrix& a, std::size_t k) {
  if (!a.is_square() || c.size() != a.rows()) throw DimensionError("krylov_matrix: shape mismatch");
  BitMatrix out(k, c.size());
  BitVector cur = c;
  for (std::size_t i = 0; i < k; ++i) {
    out.set_row(i, cur);
    if (i + 1 < k) cur = vec_mat(cur, a);
  }
  return out;
}

/// Characteristic polynomial det(xI + A) by similarity reduction to upper
/// Hessenberg form followed by the standard Hessenberg determinant recurrence.
inline Gf2Poly char_poly(const BitMatrix& a) {
  if (!a.is_square()) throw DimensionError("char_poly: matrix not square");
  const std::size_t n = a.rows();
  std::vector<std::uint8_t> h(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h[r * n + c] = a.get(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> std::uint8_t& { return h[r * n + c]; };

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && !at(p, j)) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, p), at(r, j + 1));
    }
    for (std::size_t i = j + 2; i < n; ++i) {
      if (!at(i, j)) continue;
      for (std::size_t c = 0; c < n; ++c) at(i, c) ^= at(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) ^= at(r, i);
    }
  }

  // p_k = (x + h_{k-1,k-1}) p_{k-1} + sum_{i<k} h_{i-1,k-1} (prod_{r=i}^{k-1} h_{r,r-1}) p_{i-1}
  std::vector<Gf2Poly> polys;
  polys.reserve(n + 1);
  polys.push_back(Gf2Poly::one());
  for (std::size_t k = 1; k <= n; ++k) {
    Gf2Poly pk = Gf2Poly::x() * polys[k - 1];
    if (at(k - 1, k - 1)) pk += polys[k - 1];
    bool chain = true;
    for (std::size_t i = k - 1; i >= 1 && chain; --i) {
      chain = at(i, i - 1) != 0;
      if (chain && at(i - 1, k - 1)) pk += polys[i - 1];
    }
    polys.push_back(std::move(pk));
  }
  return polys[n];
}

/// Berlekamp-Massey. Returns the characteristic polynomial x^L C(1/x) of the
/// shortest LFSR producing the sequence; its degree is the linear complexity L.
inline Gf2Poly berlekamp_massey(std::span<const std::uint8_t> s) {
  const std::size_t n = s.size();
  std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
  c[0] = b[0] = 1;
  std::size_t l = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t d = s[i] & 1;
    for (std::size_t j = 1; j <= l; ++j) d ^= c[j] & s[i - j];
    if (!d) {
      ++m;
      continue;
    }
    if (2 * l <= i) {
      t = c;
      for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      l = i + 1 - l;
      b = t;
      m = 1;
    } else {
      for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      ++m;
    }
  }
  Gf2Poly out;
  for (std::size_t j = 0; j <= l; ++j)
    if (c[j]) out.flip(l - j);
  return out;
}

/// Linear complexity of a bit sequence (degree of the Berlekamp-Massey result).
inline std::size_t linear_complexity(std::span<const std::uint8_t> s) {
  const int d = berlekamp_massey(s).degree();
  return d < 0 ? 0 : static_cast<std::size_t>(d);
}

}  // namespace kdfc::gf2
