#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kdfc/data/mersenne_factors.hpp"
#include "kdfc/error.hpp"
#include "kdfc/gf2/poly.hpp"

namespace kdfc::gf2 {

inline constexpr int kMaxCertifiedDegree = 64;

namespace detail {

inline std::vector<std::size_t> distinct_prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/// Rabin's test: p of degree n is irreducible iff x^(2^n) = x mod p and
/// gcd(x^(2^(n/q)) - x, p) = 1 for every prime q dividing n.
inline bool is_irreducible(const Gf2Poly& p) {
  const int n = p.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (!p.coeff(0)) return false;
  const Gf2Poly x = Gf2Poly::x();
  for (std::size_t q : detail::distinct_prime_factors(static_cast<std::size_t>(n))) {
    const Gf2Poly t = x_pow_2k_mod(static_cast<std::size_t>(n) / q, p) + x;
    if (!gcd(p, t).is_one()) return false;
  }
  return x_pow_2k_mod(static_cast<std::size_t>(n), p) == x % p;
}

/// Order test for x modulo p given the distinct prime divisors of 2^d - 1.
/// The exponent (2^d - 1)/q is passed as packed bits so any degree works.
inline bool has_full_order(const Gf2Poly& p, const std::vector<std::vector<Word>>& cofactors) {
  const Gf2Poly one = Gf2Poly::one();
  for (const auto& e : cofactors)
    if (powmod_bits(Gf2Poly::x(), e, p) == one) return false;
  return true;
}

/// True iff p is primitive. Certified for degree <= 64 using the built-in
/// factorizations of 2^d - 1; larger degrees raise DomainError.
inline bool is_primitive(const Gf2Poly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d > kMaxCertifiedDegree)
    throw DomainError("is_primitive: degree " + std::to_string(d) + " exceeds the factor table (max 64)");
  if (!is_irreducible(p)) return false;
  if (d == 1) return p.coeff(0);
  const std::uint64_t order = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  if (powmod(Gf2Poly::x(), order, p) != Gf2Poly::one()) return false;
  for (std::uint64_t q : data::mersenne_prime_divisors()[static_cast<std::size_t>(d - 1)])
    if (powmod(Gf2Poly::x(), order / q, p) == Gf2Poly::one()) return false;
  return true;
}

}  // namespace kdfc::gf2
