// Builds the published offline matrix Y_init for the full-scale profile
// (m = 32, b = 16, k = 468) from a fixed seed, as data/kdfc_yinit_k468.txt and
// include/kdfc/data/yinit_k468.hpp.
//
// Usage: gen_yinit <out.txt> <out.hpp> [seed] [k]

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "kdfc/confgen.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: gen_yinit <out.txt> <out.hpp> [seed] [k]\n";
    return 2;
  }
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3], nullptr, 0) : 0x4B444643ULL;
  const std::size_t k = argc > 4 ? std::stoul(argv[4]) : 468;
  constexpr std::size_t m = 32, b = 16;

  const auto& table = kdfc::gf2::default_poly_table();
  const kdfc::YMatrix y = kdfc::y_offline_seeded(m, b, k, seed, table);

  char seed_hex[32];
  std::snprintf(seed_hex, sizeof seed_hex, "0x%llx", static_cast<unsigned long long>(seed));
  const std::string provenance = std::string("seed=") + seed_hex + " rng=mt19937_64 table=fnv1a64:" + table.checksum();
  const std::string text = kdfc::y_to_text(y, provenance);

  std::ofstream txt(argv[1]);
  txt << text;
  std::ofstream hpp(argv[2]);
  hpp << "#pragma once\n\n// Generated by tools/gen_yinit.cpp; identical to data/kdfc_yinit_k" << k << ".txt.\n\n"
      << "namespace kdfc::data {\n\ninline constexpr const char* kYInitK" << k << "Text = R\"YINIT(" << text << ")YINIT\";\n\n"
      << "}  // namespace kdfc::data\n";
  if (!txt || !hpp) {
    std::cerr << "gen_yinit: write failed\n";
    return 1;
  }
  std::cout << "k=" << k << " width=" << y.width() << " " << provenance << "\n";
  return 0;
}
