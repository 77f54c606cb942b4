#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/poly.hpp"
#include "kdfc/gf2/primitive.hpp"

namespace kdfc::gf2 {

/// Degree -> polynomial table read from the text format
///
///   # kdfc-primitive-table v1 fnv1a64=<16 hex digits>
///   <degree>: e1,e2,...,ek
///
/// The checksum covers the body lines joined with '\n' (no trailing newline).
/// Irreducibility of an entry is checked the first time it is looked up.
class PolyTable {
 public:
  static constexpr std::string_view kMagic = "# kdfc-primitive-table v1 fnv1a64=";

  static std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  static std::string render(const std::vector<std::string>& body) {
    std::string joined;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) joined += '\n';
      joined += body[i];
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(joined)));
    return std::string(kMagic) + hex + "\n" + joined + "\n";
  }

  static PolyTable parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header) || header.rfind(kMagic, 0) != 0)
      throw FormatError("polynomial table: missing checksum header");
    const std::string want = header.substr(kMagic.size());

    PolyTable t;
    std::string joined;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (!first) joined += '\n';
      joined += line;
      first = false;
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw FormatError("polynomial table: bad line '" + line + "'");
      const int d = std::stoi(line.substr(0, colon));
      Gf2Poly p = Gf2Poly::parse_exponents(std::string_view(line).substr(colon + 1));
      if (p.degree() != d) throw FormatError("polynomial table: degree mismatch on line '" + line + "'");
      t.entries_.emplace(d, Entry{std::move(p), false});
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(joined)));
    if (want != hex) throw FormatError("polynomial table: checksum mismatch (header " + want + ", computed " + hex + ")");
    t.checksum_ = want;
    return t;
  }

  PolyTable() = default;
  PolyTable(const PolyTable& o) : entries_(o.entries_), checksum_(o.checksum_) {}
  PolyTable& operator=(const PolyTable& o) {
    if (this != &o) {
      entries_ = o.entries_;
      checksum_ = o.checksum_;
    }
    return *this;
  }

  const std::string& checksum() const noexcept { return checksum_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(int degree) const { return entries_.count(degree) != 0; }

  const Gf2Poly& at(int degree) const {
    const auto it = entries_.find(degree);
    if (it == entries_.end()) throw DomainError("no table polynomial of degree " + std::to_string(degree));
    std::lock_guard lock(mutex_);
    if (!it->second.checked) {
      if (!is_irreducible(it->second.poly))
        throw FormatError("polynomial table: degree " + std::to_string(degree) + " entry is reducible");
      it->second.checked = true;
    }
    return it->second.poly;
  }

  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [d, e] : entries_) out.push_back(d);
    return out;
  }

 private:
  struct Entry {
    Gf2Poly poly;
    bool checked = false;
  };
  mutable std::map<int, Entry> entries_;
  std::string checksum_;
  mutable std::mutex mutex_;
};

}  // namespace kdfc::gf2
