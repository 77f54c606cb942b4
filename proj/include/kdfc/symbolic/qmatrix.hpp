#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/poly.hpp"
#include "kdfc/symbolic/anf.hpp"

namespace kdfc::symbolic {

using SymMatrix = std::vector<std::vector<AnfPoly>>;

inline constexpr std::size_t kMaxSymbolicSize = 12;
inline constexpr std::size_t kMaxLemmaSize = 10;

/// Flat variable index of v_{i,j} (row i = 1..m-1 of Y, column j = 1..mb), 0-based.
constexpr std::size_t var_index(std::size_t i, std::size_t j, std::size_t n) noexcept { return (i - 1) * n + (j - 1); }

/// v * P for the companion matrix of p, entrywise on a symbolic row.
inline std::vector<AnfPoly> times_companion(const std::vector<AnfPoly>& v, const gf2::Gf2Poly& p) {
  const std::size_t n = v.size();
  std::vector<AnfPoly> out(n);
  for (std::size_t k = 0; k + 1 < n; ++k) out[k] = v[k + 1];
  for (std::size_t c = 0; c < n; ++c)
    if (p.coeff(c)) out[n - 1] += v[c];
  return out;
}

/// Y with e_1 = (0,...,0,1) as its first row followed by the symbolic rows v_1..v_{m-1}.
inline SymMatrix symbolic_y(std::size_t m, std::size_t n) {
  SymMatrix y(m, std::vector<AnfPoly>(n));
  y[0][n - 1] = AnfPoly::one();
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j <= n; ++j) y[i][j - 1] = AnfPoly::var(var_index(i, j, n));
  return y;
}

/// Q: block j (0 <= j < b) holds the rows Y[t] * P^j.
inline SymMatrix build_symbolic_q(std::size_t m, std::size_t b, const gf2::Gf2Poly& p) {
  const std::size_t n = m * b;
  if (n > kMaxSymbolicSize) throw DomainError("build_symbolic_q: mb must be <= 12");
  if (p.degree() != static_cast<int>(n)) throw DimensionError("build_symbolic_q: deg p must equal mb");
  SymMatrix y = symbolic_y(m, n);
  SymMatrix q;
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t t = 0; t < m; ++t) {
      q.push_back(y[t]);
      y[t] = times_companion(y[t], p);
    }
  return q;
}

/// Q_P: the rows of Q regrouped by generator, e_1 P^0..e_1 P^{b-1}, then v_1 P^0.. and so on.
inline SymMatrix permute_to_qp(const SymMatrix& q, std::size_t m, std::size_t b) {
  SymMatrix out;
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t j = 0; j < b; ++j) out.push_back(q[j * m + t]);
  return out;
}

inline SymMatrix sym_mat_mul(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  SymMatrix out(n, std::vector<AnfPoly>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t r = 0; r < k; ++r)
        if (!a[i][r].is_zero() && !b[r][j].is_zero()) out[i][j] += a[i][r] * b[r][j];
  return out;
}

/// Expands the determinant over rows in order, skipping `skip_row`, with one
/// polynomial per set of used columns. After all rows the masks have exactly
/// one free column j when a row was skipped, giving the minor mu(skip_row, j).
inline std::unordered_map<std::uint32_t, AnfPoly> expand_rows(const SymMatrix& a, std::size_t skip_row) {
  const std::size_t n = a.size();
  std::unordered_map<std::uint32_t, AnfPoly> layer{{0U, AnfPoly::one()}};
  for (std::size_t r = 0; r < n; ++r) {
    if (r == skip_row) continue;
    std::unordered_map<std::uint32_t, AnfPoly> next;
    for (const auto& [mask, val] : layer)
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1U || a[r][c].is_zero()) continue;
        next[mask | (1U << c)] += val * a[r][c];
      }
    layer.clear();
    for (auto& [mask, val] : next)
      if (!val.is_zero()) layer.emplace(mask, std::move(val));
  }
  return layer;
}

inline AnfPoly sym_determinant(const SymMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return AnfPoly::one();
  const auto layer = expand_rows(a, n);
  const auto it = layer.find(static_cast<std::uint32_t>((1ULL << n) - 1));
  return it == layer.end() ? AnfPoly::zero() : it->second;
}

/// Minors mu(i, j) for all j (determinant with row i and column j removed).
inline std::vector<AnfPoly> row_minors(const SymMatrix& a, std::size_t i) {
  const std::size_t n = a.size();
  std::vector<AnfPoly> out(n);
  const auto full = static_cast<std::uint32_t>((1ULL << n) - 1);
  for (const auto& [mask, val] : expand_rows(a, i)) {
    const std::uint32_t missing = full & ~mask;
    if (std::popcount(missing) == 1) out[static_cast<std::size_t>(std::countr_zero(missing))] = val;
  }
  return out;
}

/// Adjugate over GF(2): entry (j, i) = mu(i, j). Equals the inverse wherever det = 1.
inline SymMatrix sym_adjugate_inverse(const SymMatrix& q) {
  const std::size_t n = q.size();
  SymMatrix adj(n, std::vector<AnfPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    auto mu = row_minors(q, i);
    for (std::size_t j = 0; j < n; ++j) adj[j][i] = std::move(mu[j]);
  }
  return adj;
}

inline SymMatrix sym_submatrix(const SymMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  SymMatrix out(nr, std::vector<AnfPoly>(nc));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out[r][c] = a[r0 + r][c0 + c];
  return out;
}

inline SymMatrix symbolic_qp_times_p(const SymMatrix& q, const gf2::Gf2Poly& p) {
  SymMatrix out;
  for (const auto& row : q) out.push_back(times_companion(row, p));
  return out;
}

/// Full C = Q P adj(Q).
inline SymMatrix symbolic_config(std::size_t m, std::size_t b, const gf2::Gf2Poly& p) {
  const SymMatrix q = build_symbolic_q(m, b, p);
  return sym_mat_mul(symbolic_qp_times_p(q, p), sym_adjugate_inverse(q));
}

struct LemmaCheck {
  std::string name;
  std::string region;
  std::string expected;
  std::size_t entries = 0;
  std::size_t violations = 0;
  std::string first_violation;
  bool holds() const noexcept { return violations == 0; }
};

struct LemmaReport {
  std::size_t m = 0, b = 0;
  std::vector<LemmaCheck> checks;
  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
};

/// Degree and zero-pattern claims on the minors of Q_P (indices below are 1-based):
///   1: deg mu(Q_P[b, j]) = mb - b for j <= mb - b
///   2: for i <= b, mu = det(Q_3) on the anti-diagonal i + j = mb + 1, and 0 for i + j > mb + 1
///   3: deg mu(Q_P[i, j]) = mb - b - 1 for i > b, j <= mb - b
///   4: mu(Q_P[i, j]) = 0 for i > b, j > mb - b
/// Q_3 is the block of rows b+1..mb and columns 1..mb-b.
inline LemmaReport verify_minor_lemmas(std::size_t m, std::size_t b, const gf2::Gf2Poly& p) {
  const std::size_t n = m * b;
  if (n > kMaxLemmaSize) throw DomainError("verify_minor_lemmas: mb must be <= 10");
  const SymMatrix qp = permute_to_qp(build_symbolic_q(m, b, p), m, b);
  const std::size_t nb = n - b;
  const AnfPoly det_q3 = sym_determinant(sym_submatrix(qp, b, 0, nb, nb));

  LemmaCheck l1{"Lemma 1", "row b, columns 1..mb-b", "degree " + std::to_string(nb), 0, 0, {}};
  LemmaCheck l2{"Lemma 2", "rows 1..b, columns mb-b+1..mb", "det(Q3) on anti-diagonal, 0 below", 0, 0, {}};
  LemmaCheck l3{"Lemma 3", "rows b+1..mb, columns 1..mb-b", "degree " + std::to_string(nb == 0 ? 0 : nb - 1), 0, 0, {}};
  LemmaCheck l4{"Lemma 4", "rows b+1..mb, columns mb-b+1..mb", "0", 0, 0, {}};
  auto fail = [](LemmaCheck& c, std::size_t i, std::size_t j, const std::string& got) {
    if (c.violations++ == 0) c.first_violation = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + got;
  };

  for (std::size_t i = 1; i <= n; ++i) {
    const auto mu = row_minors(qp, i - 1);
    for (std::size_t j = 1; j <= n; ++j) {
      const AnfPoly& v = mu[j - 1];
      if (i <= b && j > nb) {
        ++l2.entries;
        if (i + j == n + 1 && !(v == det_q3)) fail(l2, i, j, v.to_string());
        if (i + j > n + 1 && !v.is_zero()) fail(l2, i, j, v.to_string());
      }
      if (i == b && j <= nb) {
        ++l1.entries;
        if (v.degree() != static_cast<int>(nb)) fail(l1, i, j, "degree " + std::to_string(v.degree()));
      }
      if (i > b && j <= nb) {
        ++l3.entries;
        if (v.degree() != static_cast<int>(nb) - 1) fail(l3, i, j, "degree " + std::to_string(v.degree()));
      }
      if (i > b && j > nb) {
        ++l4.entries;
        if (!v.is_zero()) fail(l4, i, j, v.to_string());
      }
    }
  }
  return LemmaReport{m, b, {l1, l2, l3, l4}};
}

struct Theorem1Result {
  std::size_t row = 0;  // 1-based index of the diagonal entry
  AnfPoly entry;
  int expected_degree = 0;
  bool bound_holds = false;
  bool vacuous = false;  // m = 1: no free variables
};

/// The diagonal entry C[mb-m+1, mb-m+1] (1-based) of C = Q P Q^{-1}, i.e. the
/// row of the last e_1 P^j. Its degree should equal mb - b.
inline Theorem1Result theorem1_check(std::size_t m, std::size_t b, const gf2::Gf2Poly& p) {
  const std::size_t n = m * b;
  if (n > kMaxLemmaSize) throw DomainError("theorem1_check: mb must be <= 10");
  const SymMatrix q = build_symbolic_q(m, b, p);
  const std::size_t r = n - m;
  const auto qp_row = times_companion(q[r], p);
  const auto mu = row_minors(q, r);  // column r of adj(Q): adj[k][r] = mu(r, k)
  AnfPoly entry;
  for (std::size_t k = 0; k < n; ++k)
    if (!qp_row[k].is_zero()) entry += qp_row[k] * mu[k];
  Theorem1Result res;
  res.row = r + 1;
  res.entry = entry;
  res.expected_degree = static_cast<int>(n - b);
  res.bound_holds = entry.degree() == res.expected_degree;
  res.vacuous = m == 1;
  return res;
}

/// Column c (0-based) of adj(Q): mu(Q[c, k]) for k = 1..mb.
inline std::vector<AnfPoly> adjugate_column(const SymMatrix& q, std::size_t c) { return row_minors(q, c); }

/// Theta(C): the largest degree over all entries.
inline int max_degree(const SymMatrix& a) {
  int d = AnfPoly::kZeroDegree;
  for (const auto& row : a)
    for (const auto& e : row) d = std::max(d, e.degree());
  return d;
}

}  // namespace kdfc::symbolic
