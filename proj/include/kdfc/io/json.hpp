#pragma once

// JSON forms of the structured artifacts. Needs nlohmann/json (vendor/json.hpp).

#include <json.hpp>

#include <string>
#include <vector>

#include "kdfc/attacks.hpp"
#include "kdfc/confgen.hpp"
#include "kdfc/error.hpp"
#include "kdfc/randtests.hpp"
#include "kdfc/sigma_lfsr.hpp"
#include "kdfc/symbolic/qmatrix.hpp"

namespace kdfc::io {

using nlohmann::json;

/// Rows as hex strings (bit k of a row is hex digit k/4, least significant digit first).
inline json matrix_to_json(const BitMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r).to_hex());
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"hex", rows}};
}

inline BitMatrix matrix_from_json(const json& j) {
  try {
    const std::size_t rows = j.at("rows"), cols = j.at("cols");
    const auto& hex = j.at("hex");
    if (hex.size() != rows) throw FormatError("matrix: hex row count differs from 'rows'");
    BitMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) a.set_row(r, BitVector::from_hex(hex[r].get<std::string>(), cols));
    return a;
  } catch (const json::exception& e) {
    throw FormatError(std::string("matrix: ") + e.what());
  }
}

inline json config_to_json(const SigmaConfig& cfg) {
  json gains = json::array();
  for (const auto& g : cfg.gains) gains.push_back(matrix_to_json(g));
  return json{{"m", cfg.m}, {"b", cfg.b}, {"gains", gains}};
}

inline SigmaConfig config_from_json(const json& j) {
  try {
    SigmaConfig cfg{j.at("m").get<std::size_t>(), j.at("b").get<std::size_t>(), {}};
    for (const auto& g : j.at("gains")) cfg.gains.push_back(matrix_from_json(g));
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
}

inline json tables_to_json(const attacks::IndexTables& t) { return json{{"node_count", t.node_count}, {"rows", t.rows}}; }

inline attacks::IndexTables tables_from_json(const json& j) {
  try {
    attacks::IndexTables t{j.at("node_count").get<std::size_t>(), j.at("rows").get<std::vector<std::vector<std::size_t>>>()};
    t.validate();
    return t;
  } catch (const json::exception& e) {
    throw FormatError(std::string("tables: ") + e.what());
  }
}

inline json lemma_report_to_json(const symbolic::LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"lemma", c.name},
                      {"region", c.region},
                      {"expected", c.expected},
                      {"entries", c.entries},
                      {"violations", c.violations},
                      {"first_violation", c.first_violation},
                      {"holds", c.holds()}});
  return json{{"m", r.m}, {"b", r.b}, {"all_hold", r.all_hold()}, {"checks", checks}};
}

inline json test_results_to_json(const std::vector<randtests::TestResult>& rs) {
  json out = json::array();
  for (const auto& r : rs)
    out.push_back({{"name", r.name}, {"p_value", r.p_value}, {"pass", r.pass}, {"statistic", r.statistic}, {"n", r.n}});
  return out;
}

}  // namespace kdfc::io
