#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/poly.hpp"

namespace kdfc::attacks {

using BigInt = boost::multiprecision::cpp_int;

// ---- bias and linearization arithmetic -------------------------------------

/// log2 of the combined bias of `taps` independent approximations, each of bias 2^eps_log2.
inline double pileup_bias(double eps_log2, std::size_t taps) {
  if (taps == 0) throw DomainError("pileup_bias: taps must be >= 1");
  if (eps_log2 > 0) throw DomainError("pileup_bias: eps_log2 must be <= 0");
  return static_cast<double>(taps - 1) + static_cast<double>(taps) * eps_log2;
}

/// log2 of the keystream length 1/eps^2 needed to distinguish a bias of 2^eps_final_log2.
inline double keystream_needed(double eps_final_log2) {
  if (eps_final_log2 >= 0) throw DomainError("keystream_needed: eps_final_log2 must be negative");
  return -2.0 * eps_final_log2;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of monomials of degree <= max_deg in `vars` boolean variables.
inline BigInt linearization_size(std::size_t vars, std::size_t max_deg) {
  if (max_deg > vars) throw DomainError("linearization_size: max_deg exceeds vars");
  BigInt sum = 0, term = 1;
  for (std::size_t i = 0; i <= max_deg; ++i) {
    if (i > 0) term = term * (vars - i + 1) / i;
    sum += term;
  }
  return sum;
}

inline double log2_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log2_big: argument must be positive");
  const std::size_t msb = boost::multiprecision::msb(x);
  const std::size_t shift = msb > 60 ? msb - 60 : 0;
  const auto top = static_cast<std::uint64_t>(x >> shift);
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

// ---- guess-and-determine ---------------------------------------------------

/// Equations as rows of unknown indices: a row with a single unknown entry
/// determines that entry from the others.
struct IndexTables {
  std::size_t node_count = 0;
  std::vector<std::vector<std::size_t>> rows;

  void validate() const {
    for (const auto& r : rows) {
      if (r.empty()) throw DomainError("IndexTables: empty row");
      for (auto v : r)
        if (v >= node_count) throw DomainError("IndexTables: index " + std::to_string(v) + " out of range");
    }
  }
};

using NodeSet = std::vector<std::uint8_t>;

/// LFSR words 0..34 and R1 entries 35..55; three families of 19 rows:
/// the feedback relation, the R1 update and the output equation.
inline IndexTables build_snow2_tables() {
  IndexTables t{56, {}};
  for (std::size_t i = 0; i < 19; ++i) t.rows.push_back({i, i + 2, i + 11, i + 16});
  for (std::size_t i = 0; i < 19; ++i) t.rows.push_back({i + 4, i + 35, i + 37});
  for (std::size_t i = 0; i < 19; ++i) t.rows.push_back({i, i + 15, i + 36, i + 37});
  return t;
}

/// Sliding windows of the recurrence support of p (rows t = 0..deg+1), plus the
/// two FSM families over R1 entries placed after the LFSR words.
inline IndexTables recurrence_row_tables(const gf2::Gf2Poly& p) {
  const int d = p.degree();
  if (d < 1) throw DomainError("recurrence_row_tables: degree must be >= 1");
  const auto n = static_cast<std::size_t>(d);
  const std::size_t windows = n + 2;
  const std::size_t lfsr_nodes = 2 * n + 2;
  IndexTables t{lfsr_nodes + windows + 2, {}};
  const auto exps = p.exponents();
  for (std::size_t i = 0; i < windows; ++i) {
    std::vector<std::size_t> row;
    for (auto e : exps) row.push_back(i + static_cast<std::size_t>(e));
    t.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < windows; ++i) t.rows.push_back({i + 4, lfsr_nodes + i, lfsr_nodes + i + 2});
  for (std::size_t i = 0; i < windows; ++i) t.rows.push_back({i, i + 15, lfsr_nodes + i + 1, lfsr_nodes + i + 2});
  return t;
}

/// Incremental closure: per-row unknown counts and a node-to-rows index.
class ClosureState {
 public:
  ClosureState() = default;
  explicit ClosureState(const IndexTables& t) : tables_(&t), known_(t.node_count, 0), unknown_(t.rows.size()) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) unknown_[r] = t.rows[r].size();
  }

  static std::vector<std::vector<std::size_t>> incidence(const IndexTables& t) {
    std::vector<std::vector<std::size_t>> inc(t.node_count);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (auto v : t.rows[r]) inc[v].push_back(r);
    return inc;
  }

  /// Mark v known and propagate through rows left with one unknown.
  void add(std::size_t v, const std::vector<std::vector<std::size_t>>& inc) {
    std::vector<std::size_t> work{v};
    while (!work.empty()) {
      const std::size_t x = work.back();
      work.pop_back();
      if (known_[x]) continue;
      known_[x] = 1;
      ++count_;
      for (auto r : inc[x]) {
        if (--unknown_[r] != 1) continue;
        for (auto y : tables_->rows[r])
          if (!known_[y]) work.push_back(y);
      }
    }
  }

  std::size_t known_count() const noexcept { return count_; }
  const NodeSet& known() const noexcept { return known_; }
  bool complete() const noexcept { return count_ == known_.size(); }

  /// Entry k-2 counts rows with exactly k unknowns, for k = 2..max.
  std::vector<std::size_t> unknown_profile() const {
    std::vector<std::size_t> prof;
    for (auto u : unknown_) {
      if (u < 2) continue;
      if (prof.size() < u - 1) prof.resize(u - 1, 0);
      ++prof[u - 2];
    }
    return prof;
  }

 private:
  const IndexTables* tables_ = nullptr;
  NodeSet known_;
  std::vector<std::size_t> unknown_;
  std::size_t count_ = 0;
};

/// Least fixed point of "a row with one unknown determines it", starting from `known`.
inline NodeSet gd_closure(const IndexTables& t, const NodeSet& known) {
  t.validate();
  if (known.size() != t.node_count) throw DimensionError("gd_closure: known set has wrong size");
  const auto inc = ClosureState::incidence(t);
  ClosureState s(t);
  for (std::size_t v = 0; v < known.size(); ++v)
    if (known[v]) s.add(v, inc);
  return s.known();
}

struct GdPath {
  std::vector<std::size_t> nodes;
  std::size_t eliminated = 0;
  bool covers = false;
};

struct GdOptions {
  std::size_t max_stages = 16;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

struct Candidate {
  std::vector<std::size_t> path;
  ClosureState state;
  std::vector<std::size_t> profile;
};

/// True when a is strictly better: more eliminated, then more rows with 2
/// unknowns, then 3, and so on.
inline bool better(const Candidate& a, const Candidate& b) {
  if (a.state.known_count() != b.state.known_count()) return a.state.known_count() > b.state.known_count();
  const std::size_t n = std::max(a.profile.size(), b.profile.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t x = k < a.profile.size() ? a.profile[k] : 0;
    const std::size_t y = k < b.profile.size() ? b.profile[k] : 0;
    if (x != y) return x > y;
  }
  return false;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Trellis search: stage i keeps, for every node k, the best length-i path
/// ending in k, built from the best length-(i-1) paths of the other nodes.
/// Ties fall to the lowest predecessor index, so the result does not depend on
/// the thread schedule. Throws NoSolutionError if no path covers all nodes
/// within max_stages.
inline GdPath gd_search(const IndexTables& t, const GdOptions& opt = {}) {
  t.validate();
  if (opt.max_stages == 0) throw DomainError("gd_search: max_stages must be >= 1");
  const std::size_t n = t.node_count;
  const auto inc = ClosureState::incidence(t);

  std::vector<std::optional<detail::Candidate>> best(n);
  detail::parallel_for(n, opt.threads, [&](std::size_t k) {
    detail::Candidate c{{k}, ClosureState(t), {}};
    c.state.add(k, inc);
    c.profile = c.state.unknown_profile();
    best[k] = std::move(c);
  });

  for (std::size_t stage = 1;; ++stage) {
    std::optional<std::size_t> winner;
    for (std::size_t k = 0; k < n; ++k)
      if (best[k] && best[k]->state.complete() && (!winner || detail::better(*best[k], *best[*winner]))) winner = k;
    if (winner) {
      const auto& c = *best[*winner];
      return GdPath{c.path, c.state.known_count(), true};
    }
    if (stage >= opt.max_stages) break;

    std::vector<std::optional<detail::Candidate>> next(n);
    detail::parallel_for(n, opt.threads, [&](std::size_t k) {
      std::optional<detail::Candidate> pick;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || !best[j]) continue;
        const auto& prev = *best[j];
        if (std::find(prev.path.begin(), prev.path.end(), k) != prev.path.end()) continue;
        detail::Candidate c{prev.path, prev.state, {}};
        c.path.push_back(k);
        c.state.add(k, inc);
        c.profile = c.state.unknown_profile();
        if (!pick || detail::better(c, *pick)) pick = std::move(c);
      }
      next[k] = std::move(pick);
    });
    best = std::move(next);
  }
  throw NoSolutionError("gd_search: no covering path within " + std::to_string(opt.max_stages) + " stages");
}

/// Time complexity exponent of guessing |path| words of `word_bits` bits.
inline std::size_t gd_complexity_log2(const GdPath& p, std::size_t word_bits = 32) { return word_bits * p.nodes.size(); }

}  // namespace kdfc::attacks
