// Builds data/primitive_polys.txt and include/kdfc/data/primitive_table.hpp.
//
// For every degree 2..512 the first primitive trinomial x^d + x^k + 1 (smallest k)
// is taken, falling back to the first pentanomial x^d + x^a + x^b + x^c + 1 in
// lexicographic (a, b, c) order. Each pick is certified: irreducible by Rabin's
// test and x has order exactly 2^d - 1, using the complete factorizations listed
// in data/mersenne_factors.txt.
//
// Usage: gen_primitive_table <mersenne_factors.txt> <out.txt> <out.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kdfc/gf2/poly_table.hpp"
#include "kdfc/gf2/primitive.hpp"

using boost::multiprecision::cpp_int;
using kdfc::gf2::Gf2Poly;
using kdfc::gf2::Word;

namespace {

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 512;

std::map<int, std::vector<cpp_int>> read_factors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<int, std::vector<cpp_int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const int d = std::stoi(line.substr(0, colon));
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    while (rest >> tok) out[d].push_back(cpp_int(tok.substr(0, tok.find('^'))));
  }
  return out;
}

std::vector<Word> to_words(cpp_int v) {
  std::vector<Word> w;
  while (v > 0) {
    w.push_back(static_cast<Word>(v & cpp_int(~Word{0})));
    v >>= 64;
  }
  return w;
}

bool certify(const Gf2Poly& p, const std::vector<cpp_int>& primes) {
  const int d = p.degree();
  if (!kdfc::gf2::is_irreducible(p)) return false;
  const cpp_int order = (cpp_int(1) << d) - 1;
  std::vector<std::vector<Word>> cofactors;
  for (const auto& q : primes) cofactors.push_back(to_words(order / q));
  return kdfc::gf2::has_full_order(p, cofactors);
}

Gf2Poly find_primitive(int d, const std::vector<cpp_int>& primes) {
  for (int k = 1; k < d; ++k) {
    const Gf2Poly p = Gf2Poly::from_exponents({d, k, 0});
    if (certify(p, primes)) return p;
  }
  for (int a = 3; a < d; ++a)
    for (int b = 2; b < a; ++b)
      for (int c = 1; c < b; ++c) {
        const Gf2Poly p = Gf2Poly::from_exponents({d, a, b, c, 0});
        if (certify(p, primes)) return p;
      }
  throw std::runtime_error("no primitive trinomial or pentanomial at degree " + std::to_string(d));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: gen_primitive_table <mersenne_factors.txt> <out.txt> <out.hpp>\n";
    return 2;
  }
  const auto factors = read_factors(argv[1]);
  std::vector<std::string> body;
  for (int d = kMinDegree; d <= kMaxDegree; ++d) {
    const auto it = factors.find(d);
    if (it == factors.end()) throw std::runtime_error("missing factorization for degree " + std::to_string(d));
    const Gf2Poly p = find_primitive(d, it->second);
    body.push_back(std::to_string(d) + ": " + p.exponent_list());
    if (d % 64 == 0) std::cerr << "degree " << d << " done\n";
  }
  const std::string text = kdfc::gf2::PolyTable::render(body);

  std::ofstream(argv[2]) << text;
  std::ofstream hpp(argv[3]);
  hpp << "#pragma once\n\n"
         "// Generated by tools/gen_primitive_table.cpp; identical to data/primitive_polys.txt.\n\n"
         "namespace kdfc::gf2::data {\n\n"
         "inline constexpr const char* kPrimitiveTableText = R\"TABLE(" << text << ")TABLE\";\n\n"
         "}  // namespace kdfc::gf2::data\n";
  return 0;
}
