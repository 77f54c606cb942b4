#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "kdfc/data/primitive_table.hpp"
#include "kdfc/gf2/poly_table.hpp"

namespace kdfc::gf2 {

inline constexpr int kTableMinDegree = 2;
inline constexpr int kTableMaxDegree = 512;

inline PolyTable load_poly_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open polynomial table '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return PolyTable::parse(ss.str());
}

/// The process-wide table: the file named by $KDFC_POLY_TABLE when set,
/// otherwise the embedded copy of data/primitive_polys.txt.
inline const PolyTable& default_poly_table() {
  static const PolyTable table = [] {
    if (const char* path = std::getenv("KDFC_POLY_TABLE"); path && *path) return load_poly_table(path);
    return PolyTable::parse(data::kPrimitiveTableText);
  }();
  return table;
}

/// Primitive polynomial of the given degree from the default table.
inline const Gf2Poly& primitive_poly(int degree) {
  if (degree < kTableMinDegree || degree > kTableMaxDegree)
    throw DomainError("primitive_poly: degree " + std::to_string(degree) + " outside [2, 512]");
  return default_poly_table().at(degree);
}

}  // namespace kdfc::gf2
