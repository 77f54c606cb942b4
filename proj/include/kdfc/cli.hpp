#pragma once

// Command-line front end. Needs CLI11 and nlohmann/json (vendor/).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kdfc/attacks.hpp"
#include "kdfc/confgen.hpp"
#include "kdfc/io/json.hpp"
#include "kdfc/kdfc_snow.hpp"
#include "kdfc/randtests.hpp"
#include "kdfc/sigma_lfsr.hpp"
#include "kdfc/snow2.hpp"
#include "kdfc/symbolic/qmatrix.hpp"

namespace kdfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "681,884,35" (decimal or 0x-prefixed words) or a hex string of 8 digits per word, first word first.
inline std::vector<std::uint32_t> parse_words(const std::string& text) {
  std::vector<std::uint32_t> out;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(tok, &used, 0);
      if (used != tok.size() || v > 0xFFFFFFFFULL) throw FormatError("bad word '" + tok + "'");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  }
  if (text.empty() || text.size() % 8) throw FormatError("hex input must be a multiple of 8 digits");
  for (std::size_t i = 0; i < text.size(); i += 8) {
    const std::string chunk = text.substr(i, 8);
    if (chunk.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) throw FormatError("bad hex '" + chunk + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(chunk, nullptr, 16)));
  }
  return out;
}

inline snow2::Key parse_key(const std::string& key, const std::string& iv) {
  snow2::Key k;
  k.key = parse_words(key);
  const auto ivw = parse_words(iv);
  if (ivw.size() != 4) throw DomainError("IV must be 4 words (128 bits)");
  std::copy(ivw.begin(), ivw.end(), k.iv.begin());
  k.validate();
  return k;
}

inline std::string hex_word(std::uint32_t w) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", w);
  return buf;
}

inline std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Whitespace-separated 8-digit hex words.
inline std::vector<std::uint32_t> read_hex_words(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<std::uint32_t> out;
  while (in >> tok) {
    const auto w = parse_words(tok);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

inline void print_words(std::ostream& out, const std::vector<std::uint32_t>& ws) {
  for (auto w : ws) out << hex_word(w) << '\n';
}

inline Gf2Poly poly_or_table(const std::string& exps, std::size_t degree) {
  if (!exps.empty()) {
    Gf2Poly p = Gf2Poly::parse_exponents(exps);
    if (p.degree() != static_cast<int>(degree)) throw DomainError("--poly must have degree mb = " + std::to_string(degree));
    return p;
  }
  return degree == 1 ? Gf2Poly::from_exponents({1, 0}) : gf2::primitive_poly(static_cast<int>(degree));
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"KDFC sigma-LFSR toolkit", "kdfc"};
  app.require_subcommand(1);

  // snow2
  auto* snow = app.add_subcommand("snow2", "Reference SNOW 2.0");
  snow->require_subcommand(1);
  auto* snow_stream = snow->add_subcommand("stream", "Keystream words");
  std::string key, iv;
  std::size_t n = 0;
  snow_stream->add_option("--key", key, "128/256-bit key (hex or comma list)")->required();
  snow_stream->add_option("--iv", iv, "128-bit IV (hex or comma list)")->required();
  snow_stream->add_option("-n", n, "number of words")->required();

  // kdfc
  auto* kd = app.add_subcommand("kdfc", "KDFC-SNOW");
  kd->require_subcommand(1);
  std::size_t k = kDefaultOffline, discard = kDefaultDiscard;
  std::optional<std::uint64_t> seed;
  std::string yinit_path;
  auto add_kdfc_opts = [&](CLI::App* sc) {
    sc->add_option("--key", key, "128/256-bit key (hex or comma list)")->required();
    sc->add_option("--iv", iv, "128-bit IV (hex or comma list)")->required();
    sc->add_option("--k", k, "offline iterations (default 468)");
    sc->add_option("--yinit", yinit_path, "Y_init file (kdfc-yinit text)");
    sc->add_option("--seed", seed, "seed for Y_init when --k differs from the shipped one");
    sc->add_option("--discard", discard, "words dropped after reconfiguration");
  };
  auto* kd_init = kd->add_subcommand("init", "Initialize and print a summary");
  auto* kd_stream = kd->add_subcommand("stream", "Keystream words");
  auto* kd_dump = kd->add_subcommand("dump-config", "Derived configuration as JSON");
  add_kdfc_opts(kd_init);
  add_kdfc_opts(kd_stream);
  add_kdfc_opts(kd_dump);
  kd_stream->add_option("-n", n, "number of words")->required();

  // gen-config
  auto* gen = app.add_subcommand("gen-config", "Generate a configuration from a seed; prints JSON");
  std::size_t m = 0, b = 0;
  std::string poly;
  std::optional<std::size_t> gen_k;
  gen->add_option("--m", m, "word width")->required();
  gen->add_option("--b", b, "number of delay blocks")->required();
  gen->add_option("--poly", poly, "target polynomial as exponents, e.g. 8,4,3,2,0 (default: table entry)");
  gen->add_option("--k", gen_k, "offline iterations (default mb - m)");
  gen->add_option("--seed", seed, "RNG seed")->required();

  // char-poly
  auto* cp = app.add_subcommand("char-poly", "Characteristic polynomial as a descending exponent list");
  bool cp_snow = false, cp_ref = false, cp_compare = false;
  std::string cp_config;
  cp->add_flag("--snow2", cp_snow, "the SNOW 2.0 sigma-LFSR configuration");
  cp->add_option("--config", cp_config, "configuration JSON file");
  cp->add_flag("--reference", cp_ref, "the listed degree-512 f(x)");
  cp->add_flag("--compare", cp_compare, "also compare with f(x) and its reciprocal");

  // analyze
  auto* an = app.add_subcommand("analyze", "Attack arithmetic");
  an->require_subcommand(1);
  auto* an_bias = an->add_subcommand("bias", "Piling-up bias and keystream length");
  double eps = 0;
  std::size_t taps = 0;
  an_bias->add_option("--eps-log2", eps, "log2 of the masking bias")->required();
  an_bias->add_option("--taps", taps, "number of combined approximations")->required();
  auto* an_lin = an->add_subcommand("linearization", "Monomial count after linearization");
  std::size_t vars = 0, deg = 0;
  an_lin->add_option("--vars", vars)->required();
  an_lin->add_option("--deg", deg)->required();
  auto* an_gd = an->add_subcommand("gd", "Guess-and-determine basis search");
  std::string tables = "snow2";
  std::size_t max_stages = 16;
  unsigned threads = 0;
  bool dump_tables = false;
  an_gd->add_option("--tables", tables, "snow2, kdfc or a JSON file");
  an_gd->add_option("--max-stages", max_stages);
  an_gd->add_option("--threads", threads);
  an_gd->add_flag("--dump-tables", dump_tables, "print the tables as JSON and exit");

  // randtest
  auto* rt = app.add_subcommand("randtest", "Statistical test battery on hex words (MSB first)");
  std::string rt_in, report = "text";
  rt->add_option("--in", rt_in, "file of hex words, '-' for stdin")->required();
  rt->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* vf = app.add_subcommand("verify", "Checks of the structural claims");
  vf->require_subcommand(1);
  bool as_json = false, show_column = false, exhaustive = false;
  auto* vf_lem = vf->add_subcommand("lemmas", "Minor degree/zero claims on symbolic Q_P");
  vf_lem->add_option("--m", m)->required();
  vf_lem->add_option("--b", b)->required();
  vf_lem->add_option("--poly", poly);
  vf_lem->add_flag("--json", as_json);
  vf_lem->add_flag("--show-column", show_column, "print column mb-m+1 of adj(Q)");
  auto* vf_t1 = vf->add_subcommand("theorem1", "Degree of the diagonal entry of C");
  vf_t1->add_option("--m", m)->required();
  vf_t1->add_option("--b", b)->required();
  vf_t1->add_option("--poly", poly);
  auto* vf_cnt = vf->add_subcommand("count", "Number of primitive configurations");
  vf_cnt->add_option("--m", m)->required();
  vf_cnt->add_option("--b", b)->required();
  vf_cnt->add_flag("--exhaustive", exhaustive, "also enumerate all gain tuples");
  auto* vf_per = vf->add_subcommand("period", "Cycle structure of a generated configuration");
  vf_per->add_option("--m", m)->required();
  vf_per->add_option("--b", b)->required();
  vf_per->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kdfc: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (snow->parsed()) {
      print_words(out, snow2::keystream(parse_key(key, iv), n));
    } else if (kd->parsed()) {
      KdfcParams p;
      p.key = parse_key(key, iv);
      p.discard = discard;
      if (!yinit_path.empty()) {
        p.y_init = y_from_text(read_file(yinit_path));
        if (p.y_init.iterations != k && k != kDefaultOffline) throw DomainError("--k disagrees with the Y_init file");
      } else if (k != kDefaultOffline) {
        if (!seed) throw UsageError("--seed is required when --k differs from 468 and no --yinit is given");
        p.y_init = y_offline_seeded(kKdfcM, kKdfcB, k, *seed);
      }
      KdfcSnow s(p);
      if (kd_stream->parsed()) {
        print_words(out, s.keystream(n));
      } else if (kd_dump->parsed()) {
        out << io::config_to_json(s.config()).dump(1) << '\n';
      } else {
        const bool ok = gf2::char_poly(build_config_matrix(s.config())) == p.target;
        out << "offline iterations: " << p.offline() << "\nonline iterations: " << p.online() << "\nfill words:";
        for (std::size_t i = snow2::kInitClocks - p.online(); i < snow2::kInitClocks; ++i) out << ' ' << hex_word(s.captured_f()[i]);
        out << "\nchar poly equals target: " << (ok ? "yes" : "no") << "\nlfsr:";
        for (auto w : s.lfsr_words()) out << ' ' << hex_word(w);
        out << "\nr1: " << hex_word(s.fsm().r1) << "\nr2: " << hex_word(s.fsm().r2) << '\n';
        if (!ok) return kExitDomain;
      }
    } else if (gen->parsed()) {
      const Gf2Poly p = poly_or_table(poly, m * b);
      const std::size_t kk = gen_k.value_or(m * b - m);
      out << io::config_to_json(generate_config_seeded(m, b, p, kk, *seed)).dump(1) << '\n';
    } else if (cp->parsed()) {
      const int sources = int(cp_snow) + int(cp_ref) + int(!cp_config.empty());
      if (sources != 1) throw UsageError("char-poly needs exactly one of --snow2, --config, --reference");
      Gf2Poly p;
      if (cp_ref) p = snow2::snow2_char_poly_reference();
      else if (cp_snow) p = gf2::char_poly(build_config_matrix(snow2::snow2_gains()));
      else p = gf2::char_poly(build_config_matrix(io::config_from_json(io::json::parse(read_file(cp_config)))));
      out << p.exponent_list() << '\n';
      if (cp_compare) {
        const Gf2Poly f = snow2::snow2_char_poly_reference();
        const Gf2Poly rec = f.reciprocal();
        out << "equals f(x): " << (p == f ? "yes" : "no") << "\nequals reciprocal of f(x): " << (p == rec ? "yes" : "no") << '\n';
      }
    } else if (an_bias->parsed()) {
      const double fin = attacks::pileup_bias(eps, taps);
      out << "eps_final_log2: " << fixed(fin) << "\nkeystream_log2: " << fixed(attacks::keystream_needed(fin)) << '\n';
    } else if (an_lin->parsed()) {
      const auto size = attacks::linearization_size(vars, deg);
      out << "monomials: " << size.str() << "\nlog2: " << fixed(attacks::log2_big(size)) << '\n';
    } else if (an_gd->parsed()) {
      attacks::IndexTables t;
      if (tables == "snow2") t = attacks::build_snow2_tables();
      else if (tables == "kdfc") t = attacks::recurrence_row_tables(snow2::snow2_char_poly_reference());
      else t = io::tables_from_json(io::json::parse(read_file(tables)));
      if (dump_tables) {
        out << io::tables_to_json(t).dump() << '\n';
      } else {
        const auto path = attacks::gd_search(t, {max_stages, threads});
        out << "basis size: " << path.nodes.size() << "\npath:";
        for (auto v : path.nodes) out << ' ' << v;
        out << "\ncomplexity_log2: " << attacks::gd_complexity_log2(path) << '\n';
      }
    } else if (rt->parsed()) {
      const auto bits = randtests::bits_from_words(read_hex_words(read_file(rt_in)));
      const auto rs = randtests::run_battery(bits);
      if (report == "json") {
        out << io::test_results_to_json(rs).dump(1) << '\n';
      } else {
        for (const auto& r : rs) out << r.name << ' ' << fixed(r.p_value, 6) << ' ' << (r.pass ? "pass" : "FAIL") << '\n';
      }
      for (const auto& r : rs)
        if (!r.pass) return kExitDomain;
    } else if (vf_lem->parsed()) {
      const Gf2Poly p = poly_or_table(poly, m * b);
      const auto rep = symbolic::verify_minor_lemmas(m, b, p);
      if (as_json) {
        out << io::lemma_report_to_json(rep).dump(1) << '\n';
      } else {
        for (const auto& c : rep.checks)
          out << c.name << " [" << c.region << "] expected " << c.expected << ": " << (c.holds() ? "holds" : "VIOLATED") << " ("
              << c.entries << " entries" << (c.holds() ? "" : ", first " + c.first_violation) << ")\n";
      }
      if (show_column) {
        const auto q = symbolic::build_symbolic_q(m, b, p);
        const auto col = symbolic::adjugate_column(q, m * b - m);
        for (std::size_t i = 0; i < col.size(); ++i) out << "adj(Q)[" << i + 1 << "," << m * b - m + 1 << "] = " << col[i].to_string() << '\n';
      }
      if (!rep.all_hold()) return kExitDomain;
    } else if (vf_t1->parsed()) {
      const auto r = symbolic::theorem1_check(m, b, poly_or_table(poly, m * b));
      out << "entry C[" << r.row << "," << r.row << "] = " << r.entry.to_string() << "\ndegree: " << r.entry.degree()
          << "\nexpected: " << r.expected_degree << "\nholds: " << (r.bound_holds ? "yes" : "no") << (r.vacuous ? " (vacuous, m = 1)" : "")
          << '\n';
      if (!r.bound_holds) return kExitDomain;
    } else if (vf_cnt->parsed()) {
      const auto formula = count_configurations(m, b);
      out << "formula: " << formula.str() << '\n';
      if (exhaustive) {
        const auto brute = count_configurations_exhaustive(m, b);
        out << "exhaustive: " << brute << '\n';
        if (formula != brute) return kExitDomain;
      }
    } else if (vf_per->parsed()) {
      const auto cfg = generate_config_seeded(m, b, poly_or_table("", m * b), m * b - m, *seed);
      const auto cycles = cycle_structure(cfg);
      for (const auto& [len, count] : cycles) out << "cycle length " << len << " x " << count << '\n';
      const std::uint64_t want = (std::uint64_t{1} << (m * b)) - 1;
      const bool maximal = cycles.size() == 2 && cycles[0] == std::pair<std::uint64_t, std::uint64_t>{1, 1} &&
                           cycles[1] == std::pair<std::uint64_t, std::uint64_t>{want, 1};
      out << "every nonzero state has period " << want << ": " << (maximal ? "yes" : "no") << '\n';
      if (!maximal) return kExitDomain;
    }
  } catch (const UsageError& e) {
    err << "kdfc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const kdfc::Error& e) {
    err << "kdfc: " << e.what() << '\n';
    return kExitDomain;
  } catch (const io::json::exception& e) {
    err << "kdfc: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "kdfc: bad number: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    err << "kdfc: number out of range: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace kdfc::cli
