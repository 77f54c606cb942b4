#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kdfc/data/mersenne_factors.hpp"
#include "kdfc/error.hpp"
#include "kdfc/gf2/linalg.hpp"
#include "kdfc/gf2/poly.hpp"
#include "kdfc/gf2/primitive.hpp"
#include "kdfc/gf2/primitive_table.hpp"
#include "kdfc/sigma_lfsr.hpp"

namespace kdfc {

using gf2::Gf2Poly;
using gf2::PolyTable;

/// Y during the row-extension phase: m rows, m + iterations columns.
struct YMatrix {
  BitMatrix rows;
  std::size_t iterations = 0;

  std::size_t m() const noexcept { return rows.rows(); }
  std::size_t width() const noexcept { return rows.cols(); }

  friend bool operator==(const YMatrix&, const YMatrix&) = default;
};

/// Fill bits for a run of iterations. Entry j is an m-bit word for the j-th
/// iteration it covers; row t (other than the active row) is extended by bit t.
/// The active row's bit is ignored, so each iteration consumes m - 1 bits.
struct FillBits {
  std::vector<BitVector> words;

  std::size_t size() const noexcept { return words.size(); }

  /// Words drawn from a seeded mt19937_64, low bits first (ceil(m/64) draws per word).
  static FillBits from_seed(std::uint64_t seed, std::size_t m, std::size_t iterations) {
    std::mt19937_64 rng(seed);
    return from_rng(rng, m, iterations);
  }

  static FillBits from_rng(std::mt19937_64& rng, std::size_t m, std::size_t iterations) {
    FillBits f;
    for (std::size_t i = 0; i < iterations; ++i) {
      BitVector w(m);
      for (std::size_t base = 0; base < m; base += 64) {
        const std::uint64_t r = rng();
        for (std::size_t j = 0; j < 64 && base + j < m; ++j)
          if ((r >> j) & 1U) w.set(base + j);
      }
      f.words.push_back(std::move(w));
    }
    return f;
  }

  static FillBits from_words(const std::vector<std::uint64_t>& raw, std::size_t m) {
    FillBits f;
    for (auto r : raw) f.words.push_back(BitVector::from_word(r, m));
    return f;
  }
};

namespace detail {

/// v * P for the companion matrix P of p (degree n = v.size()):
/// shift every coordinate down by one and put <v, (c_0..c_{n-1})> in the last slot.
inline void companion_step(BitVector& v, const BitVector& coeffs) {
  const bool fb = v.dot(coeffs);
  auto w = v.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] >>= 1;
    if (i + 1 < w.size()) w[i] |= w[i + 1] << 63;
  }
  v.set(v.size() - 1, fb);
}

/// r * g(P) with g = sum_j y_j x^j, evaluated by walking r, rP, rP^2, ...
inline BitVector apply_poly_of_companion(const BitVector& r, const BitVector& y, const BitVector& coeffs) {
  BitVector acc(r.size());
  BitVector cur = r;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y.get(j)) acc ^= cur;
    if (j + 1 < y.size()) companion_step(cur, coeffs);
  }
  return acc;
}

}  // namespace detail

/// Coefficients y of the polynomial g with c * g(A) = e_1, i.e. the solution of
/// y * K = e_1 over the Krylov matrix K of c under the companion matrix A.
inline BitVector lin_solver_coeffs(const BitVector& c, const BitMatrix& a) {
  if (c.is_zero()) throw DomainError("lin_solver: c must be nonzero");
  const BitMatrix k = gf2::krylov_matrix(c, a, c.size());
  return gf2::solve_row(k, BitVector::unit_last(c.size()));
}

/// Lambda = sum_j y_j A^j with c * Lambda = e_1 (checked).
inline BitMatrix lin_solver(const BitVector& c, const BitMatrix& a) {
  const BitVector y = lin_solver_coeffs(c, a);
  const std::size_t n = c.size();
  BitMatrix lambda(n, n);
  BitMatrix power = BitMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (y.get(j)) lambda = gf2::mat_add(lambda, power);
    if (j + 1 < n) power = gf2::mat_mul(power, a);
  }
  if (!(gf2::vec_mat(c, lambda) == BitVector::unit_last(n))) throw InvariantError("lin_solver: c * Lambda != e_1");
  return lambda;
}

/// One step of the row-extension phase (iteration i, 1-based).
/// `poly` is the primitive polynomial of degree Y.width(); `fill` has m bits.
inline YMatrix y_iterate(const YMatrix& y, std::size_t i, const Gf2Poly& poly, const BitVector& fill) {
  const std::size_t m = y.m();
  const std::size_t w = y.width();
  if (poly.degree() != static_cast<int>(w)) throw DimensionError("y_iterate: polynomial degree must equal the width of Y");
  if (fill.size() != m) throw DimensionError("y_iterate: fill word must have m bits");
  const std::size_t active = i % m;
  const BitVector coeffs = poly.low_coeffs(w);

  const BitMatrix a = gf2::companion_matrix(poly);
  const BitVector g = lin_solver_coeffs(y.rows.row(active), a);

  YMatrix out{BitMatrix(m, w + 1), y.iterations + 1};
  for (std::size_t t = 0; t < m; ++t) {
    BitVector r = detail::apply_poly_of_companion(y.rows.row(t), g, coeffs);
    if (t == active) {
      if (!(r == BitVector::unit_last(w))) throw InvariantError("y_iterate: active row did not map to e_1");
      out.rows.set_row(t, BitVector::unit_last(w + 1));
    } else {
      out.rows.set_row(t, r.appended(fill.get(t)));
    }
  }
  if (gf2::rank(out.rows) != m) throw InvariantError("y_iterate: Y lost full row rank");
  return out;
}

/// Runs iterations y.iterations+1 .. y.iterations+fill.size() with table polynomials.
inline YMatrix y_run(YMatrix y, const FillBits& fill, const PolyTable& table) {
  for (const auto& word : fill.words) {
    const std::size_t i = y.iterations + 1;
    const int w = static_cast<int>(y.width());
    y = y_iterate(y, i, w == 1 ? Gf2Poly::from_exponents({1, 0}) : table.at(w), word);
  }
  return y;
}

/// The offline part: k iterations starting from a full-rank m x m matrix.
inline YMatrix y_offline(std::size_t m, std::size_t b, std::size_t k, const FillBits& fill, const BitMatrix& init,
                         const PolyTable& table = gf2::default_poly_table()) {
  if (init.rows() != m || init.cols() != m) throw DimensionError("y_offline: init must be m x m");
  if (gf2::rank(init) != m) throw DomainError("y_offline: init must be full rank");
  if (k > m * b - m) throw DomainError("y_offline: k exceeds mb - m");
  if (fill.size() < k) throw DimensionError("y_offline: not enough fill words");
  FillBits first{std::vector<BitVector>(fill.words.begin(), fill.words.begin() + static_cast<std::ptrdiff_t>(k))};
  return y_run(YMatrix{init, 0}, first, table);
}

/// Uniform m x m matrix of full rank (rows drawn low bits first, redrawn until invertible).
inline BitMatrix random_full_rank(std::size_t m, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix a(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t base = 0; base < m; base += 64) {
        const std::uint64_t w = rng();
        for (std::size_t j = 0; j < 64 && base + j < m; ++j)
          if ((w >> j) & 1U) a.set(r, base + j);
      }
    if (gf2::rank(a) == m) return a;
  }
}

/// Offline phase from a seed: the initial matrix, then k fill words, from one mt19937_64 stream.
inline YMatrix y_offline_seeded(std::size_t m, std::size_t b, std::size_t k, std::uint64_t seed,
                                const PolyTable& table = gf2::default_poly_table()) {
  std::mt19937_64 rng(seed);
  const BitMatrix init = random_full_rank(m, rng);
  const FillBits fill = FillBits::from_rng(rng, m, k);
  return y_offline(m, b, k, fill, init, table);
}

inline constexpr const char* kYInitMagic = "# kdfc-yinit v1";

/// Text form: a header line with the shape and provenance, then one hex row per line.
inline std::string y_to_text(const YMatrix& y, const std::string& provenance) {
  std::string s = std::string(kYInitMagic) + " m=" + std::to_string(y.m()) + " iterations=" + std::to_string(y.iterations) +
                  " width=" + std::to_string(y.width()) + " " + provenance + "\n";
  for (std::size_t r = 0; r < y.m(); ++r) s += y.rows.row(r).to_hex() + "\n";
  return s;
}

inline YMatrix y_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  if (header.rfind(kYInitMagic, 0) != 0) throw FormatError("y_init: missing header");
  auto field = [&](const std::string& key) -> std::size_t {
    const auto pos = header.find(" " + key + "=");
    if (pos == std::string::npos) throw FormatError("y_init: header lacks " + key);
    return std::stoul(header.substr(pos + key.size() + 2));
  };
  const std::size_t m = field("m"), iterations = field("iterations"), width = field("width");
  if (width != m + iterations) throw FormatError("y_init: width must equal m + iterations");
  YMatrix y{BitMatrix(m, width), iterations};
  std::string line;
  for (std::size_t r = 0; r < m; ++r) {
    if (!std::getline(in, line)) throw FormatError("y_init: expected " + std::to_string(m) + " rows");
    y.rows.set_row(r, BitVector::from_hex(line, width));
  }
  if (gf2::rank(y.rows) != m) throw FormatError("y_init: rows are not linearly independent");
  return y;
}

/// Rotate rows so that the e_1 row (the last active row) is last.
inline BitMatrix finalize_y(const YMatrix& y) {
  const std::size_t m = y.m();
  const std::size_t last_active = y.iterations % m;
  BitMatrix out(m, y.width());
  for (std::size_t t = 0; t < m; ++t) out.set_row(t, y.rows.row((last_active + 1 + t) % m));
  if (!(out.row(m - 1) == BitVector::unit_last(y.width()))) throw InvariantError("finalize_y: last row is not e_1");
  return out;
}

/// Q with block j holding the rows Y[t] * P^j.
inline BitMatrix build_q(const BitMatrix& y, const Gf2Poly& p) {
  const std::size_t m = y.rows();
  const std::size_t n = y.cols();
  if (p.degree() != static_cast<int>(n) || n % m) throw DimensionError("build_q: Y must be m x deg(p) with m | deg(p)");
  const BitVector coeffs = p.low_coeffs(n);
  BitMatrix q(n, n);
  for (std::size_t t = 0; t < m; ++t) {
    BitVector r = y.row(t);
    for (std::size_t j = 0; j < n / m; ++j) {
      q.set_row(j * m + t, r);
      detail::companion_step(r, coeffs);
    }
  }
  if (!gf2::determinant(q)) throw SingularMatrixError("build_q: Q is singular");
  return q;
}

/// C = Q P Q^{-1}, returned as the gains of its last m rows.
inline SigmaConfig assemble_config(const BitMatrix& q, const Gf2Poly& p, std::size_t m) {
  const std::size_t n = q.rows();
  const BitVector coeffs = p.low_coeffs(n);
  BitMatrix qp(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    BitVector v = q.row(r);
    detail::companion_step(v, coeffs);
    qp.set_row(r, v);
  }
  const BitMatrix c = gf2::mat_mul(qp, gf2::mat_inverse(q));
  return extract_config(c, m);
}

/// Configuration from a published Y (after k offline iterations) and the online fill words.
inline SigmaConfig generate_config(std::size_t m, std::size_t b, const Gf2Poly& p, const YMatrix& y_init,
                                   const FillBits& online_fill, const PolyTable& table = gf2::default_poly_table()) {
  const std::size_t n = m * b;
  if (p.degree() != static_cast<int>(n)) throw DimensionError("generate_config: p must have degree mb");
  if (y_init.m() != m || y_init.width() != m + y_init.iterations) throw DimensionError("generate_config: y_init has wrong shape");
  const std::size_t remaining = n - m - y_init.iterations;
  if (online_fill.size() != remaining)
    throw DimensionError("generate_config: expected " + std::to_string(remaining) + " online fill words");
  const YMatrix y = y_run(y_init, online_fill, table);
  return assemble_config(build_q(finalize_y(y), p), p, m);
}

/// Configuration generation end to end from one seeded stream: the initial matrix, the k
/// offline fill words, then the online ones. The result does not depend on k.
inline SigmaConfig generate_config_seeded(std::size_t m, std::size_t b, const Gf2Poly& p, std::size_t k, std::uint64_t seed,
                                          const PolyTable& table = gf2::default_poly_table()) {
  if (k > m * b - m) throw DomainError("generate_config_seeded: k exceeds mb - m");
  std::mt19937_64 rng(seed);
  const BitMatrix init = random_full_rank(m, rng);
  const FillBits offline = FillBits::from_rng(rng, m, k);
  const FillBits online = FillBits::from_rng(rng, m, m * b - m - k);
  return generate_config(m, b, p, y_offline(m, b, k, offline, init, table), online, table);
}

using BigInt = boost::multiprecision::cpp_int;

/// Euler's phi of 2^d - 1 from the built-in factor table (d <= 64).
inline BigInt phi_mersenne(std::size_t d) {
  if (d == 0 || d > 64) throw DomainError("phi_mersenne: degree outside the factor table");
  BigInt n = (BigInt(1) << d) - 1;
  BigInt phi = n;
  for (std::uint64_t q : gf2::data::mersenne_prime_divisors()[d - 1]) phi = phi / q * (q - 1);
  return phi;
}

/// |GL(m, 2)| / (2^m - 1) * phi(2^mb - 1) / mb * 2^(m(m-1)(b-1)).
inline BigInt count_configurations(std::size_t m, std::size_t b) {
  if (m == 0 || b == 0 || m * b > 64) throw DomainError("count_configurations: need 1 <= mb <= 64");
  BigInt gl = 1;
  for (std::size_t i = 0; i < m; ++i) gl *= (BigInt(1) << m) - (BigInt(1) << i);
  const BigInt n = m * b;
  return gl / ((BigInt(1) << m) - 1) * (phi_mersenne(m * b) / n) * (BigInt(1) << (m * (m - 1) * (b - 1)));
}

inline constexpr std::size_t kMaxEnumerationBits = 16;

/// Brute force over every gain tuple: the number of M-companion matrices whose
/// characteristic polynomial is primitive of degree mb. Guarded to m^2 b <= 16.
inline std::uint64_t count_configurations_exhaustive(std::size_t m, std::size_t b) {
  if (m == 0 || b == 0 || m * m * b > kMaxEnumerationBits) throw DomainError("count_configurations_exhaustive: need m^2 b <= 16");
  const std::size_t bits = m * m * b;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    SigmaConfig cfg{m, b, std::vector<BitMatrix>(b, BitMatrix(m, m))};
    for (std::size_t k = 0; k < bits; ++k)
      if ((code >> k) & 1U) cfg.gains[k / (m * m)].set((k % (m * m)) / m, k % m);
    const Gf2Poly cp = gf2::char_poly(build_config_matrix(cfg));
    if (cp.degree() == static_cast<int>(m * b) && gf2::is_primitive(cp)) ++count;
  }
  return count;
}

}  // namespace kdfc
