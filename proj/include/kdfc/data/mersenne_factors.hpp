#pragma once

#include <array>
#include <cstdint>
#include <vector>

// Generated by tools/extract_mersenne_factors.py from data/mersenne_factors.txt.

namespace kdfc::gf2::data {

/// Distinct prime divisors of 2^d - 1, indexed by d - 1 for d = 1..64.
inline const std::array<std::vector<std::uint64_t>, 64>& mersenne_prime_divisors() {
  static const std::array<std::vector<std::uint64_t>, 64> table{{
    {},  // 1
    {3ULL},  // 2
    {7ULL},  // 3
    {3ULL, 5ULL},  // 4
    {31ULL},  // 5
    {3ULL, 7ULL},  // 6
    {127ULL},  // 7
    {3ULL, 5ULL, 17ULL},  // 8
    {7ULL, 73ULL},  // 9
    {3ULL, 11ULL, 31ULL},  // 10
    {23ULL, 89ULL},  // 11
    {3ULL, 5ULL, 7ULL, 13ULL},  // 12
    {8191ULL},  // 13
    {3ULL, 43ULL, 127ULL},  // 14
    {7ULL, 31ULL, 151ULL},  // 15
    {3ULL, 5ULL, 17ULL, 257ULL},  // 16
    {131071ULL},  // 17
    {3ULL, 7ULL, 19ULL, 73ULL},  // 18
    {524287ULL},  // 19
    {3ULL, 5ULL, 11ULL, 31ULL, 41ULL},  // 20
    {7ULL, 127ULL, 337ULL},  // 21
    {3ULL, 23ULL, 89ULL, 683ULL},  // 22
    {47ULL, 178481ULL},  // 23
    {3ULL, 5ULL, 7ULL, 13ULL, 17ULL, 241ULL},  // 24
    {31ULL, 601ULL, 1801ULL},  // 25
    {3ULL, 2731ULL, 8191ULL},  // 26
    {7ULL, 73ULL, 262657ULL},  // 27
    {3ULL, 5ULL, 29ULL, 43ULL, 113ULL, 127ULL},  // 28
    {233ULL, 1103ULL, 2089ULL},  // 29
    {3ULL, 7ULL, 11ULL, 31ULL, 151ULL, 331ULL},  // 30
    {2147483647ULL},  // 31
    {3ULL, 5ULL, 17ULL, 257ULL, 65537ULL},  // 32
    {7ULL, 23ULL, 89ULL, 599479ULL},  // 33
    {3ULL, 43691ULL, 131071ULL},  // 34
    {31ULL, 71ULL, 127ULL, 122921ULL},  // 35
    {3ULL, 5ULL, 7ULL, 13ULL, 19ULL, 37ULL, 73ULL, 109ULL},  // 36
    {223ULL, 616318177ULL},  // 37
    {3ULL, 174763ULL, 524287ULL},  // 38
    {7ULL, 79ULL, 8191ULL, 121369ULL},  // 39
    {3ULL, 5ULL, 11ULL, 17ULL, 31ULL, 41ULL, 61681ULL},  // 40
    {13367ULL, 164511353ULL},  // 41
    {3ULL, 7ULL, 43ULL, 127ULL, 337ULL, 5419ULL},  // 42
    {431ULL, 9719ULL, 2099863ULL},  // 43
    {3ULL, 5ULL, 23ULL, 89ULL, 397ULL, 683ULL, 2113ULL},  // 44
    {7ULL, 31ULL, 73ULL, 151ULL, 631ULL, 23311ULL},  // 45
    {3ULL, 47ULL, 178481ULL, 2796203ULL},  // 46
    {2351ULL, 4513ULL, 13264529ULL},  // 47
    {3ULL, 5ULL, 7ULL, 13ULL, 17ULL, 97ULL, 241ULL, 257ULL, 673ULL},  // 48
    {127ULL, 4432676798593ULL},  // 49
    {3ULL, 11ULL, 31ULL, 251ULL, 601ULL, 1801ULL, 4051ULL},  // 50
    {7ULL, 103ULL, 2143ULL, 11119ULL, 131071ULL},  // 51
    {3ULL, 5ULL, 53ULL, 157ULL, 1613ULL, 2731ULL, 8191ULL},  // 52
    {6361ULL, 69431ULL, 20394401ULL},  // 53
    {3ULL, 7ULL, 19ULL, 73ULL, 87211ULL, 262657ULL},  // 54
    {23ULL, 31ULL, 89ULL, 881ULL, 3191ULL, 201961ULL},  // 55
    {3ULL, 5ULL, 17ULL, 29ULL, 43ULL, 113ULL, 127ULL, 15790321ULL},  // 56
    {7ULL, 32377ULL, 524287ULL, 1212847ULL},  // 57
    {3ULL, 59ULL, 233ULL, 1103ULL, 2089ULL, 3033169ULL},  // 58
    {179951ULL, 3203431780337ULL},  // 59
    {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 31ULL, 41ULL, 61ULL, 151ULL, 331ULL, 1321ULL},  // 60
    {2305843009213693951ULL},  // 61
    {3ULL, 715827883ULL, 2147483647ULL},  // 62
    {7ULL, 73ULL, 127ULL, 337ULL, 92737ULL, 649657ULL},  // 63
    {3ULL, 5ULL, 17ULL, 257ULL, 641ULL, 65537ULL, 6700417ULL},  // 64
  }};
  return table;
}

}  // namespace kdfc::gf2::data
