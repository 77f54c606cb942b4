#pragma once

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kdfc/error.hpp"
#include "kdfc/gf2/bit_matrix.hpp"
#include "kdfc/gf2/linalg.hpp"

namespace kdfc::randtests {

using Bits = std::vector<std::uint8_t>;

inline constexpr double kAlpha = 0.01;

struct TestResult {
  std::string name;
  double p_value = 0;
  bool pass = false;
  double statistic = 0;
  std::size_t n = 0;
};

/// Thrown when a sequence is shorter than a test's minimum length.
class InsufficientDataError : public DomainError {
 public:
  InsufficientDataError(const std::string& test, std::size_t need, std::size_t got)
      : DomainError(test + ": needs at least " + std::to_string(need) + " bits, got " + std::to_string(got)), required(need) {}
  std::size_t required;
};

struct Params {
  std::size_t block_frequency_m = 128;
  std::size_t serial_m = 2;
  std::size_t apen_m = 2;
  std::size_t linear_complexity_m = 500;
  bool enforce_minimum = true;
};

inline const std::vector<std::string>& test_names() {
  static const std::vector<std::string> names{
      "monobit", "block-frequency", "runs", "longest-run", "rank", "cumulative-sums-forward", "cumulative-sums-reverse",
      "serial-1", "serial-2", "approximate-entropy", "linear-complexity"};
  return names;
}

namespace detail {

inline double igamc(double a, double x) { return x <= 0 ? 1.0 : boost::math::gamma_q(a, x); }
inline double erfc(double x) { return boost::math::erfc(x); }
inline double phi(double x) { return 0.5 * boost::math::erfc(-x / std::sqrt(2.0)); }

inline TestResult make(std::string name, double p, double stat, std::size_t n) {
  p = std::min(1.0, std::max(0.0, p));
  return TestResult{std::move(name), p, p >= kAlpha, stat, n};
}

inline void need(const Params& prm, const std::string& test, std::size_t min, std::size_t n) {
  if (n == 0 || (prm.enforce_minimum && n < min)) throw InsufficientDataError(test, std::max<std::size_t>(min, 1), n);
}

/// Overlapping m-bit pattern counts with wrap-around.
inline std::vector<std::size_t> pattern_counts(const Bits& e, std::size_t m) {
  std::vector<std::size_t> cnt(std::size_t{1} << m, 0);
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = 0;
    for (std::size_t k = 0; k < m; ++k) v = (v << 1) | e[(i + k) % n];
    ++cnt[v];
  }
  return cnt;
}

inline double psi_sq(const Bits& e, std::size_t m) {
  if (m == 0) return 0;
  const double n = static_cast<double>(e.size());
  double s = 0;
  for (auto c : pattern_counts(e, m)) s += static_cast<double>(c) * static_cast<double>(c);
  return s * std::pow(2.0, static_cast<double>(m)) / n - n;
}

inline double apen_phi(const Bits& e, std::size_t m) {
  if (m == 0) return 0;
  const double n = static_cast<double>(e.size());
  double s = 0;
  for (auto c : pattern_counts(e, m))
    if (c) {
      const double pi = static_cast<double>(c) / n;
      s += pi * std::log(pi);
    }
  return s;
}

inline double cusum_p(const Bits& e, bool forward) {
  const auto n = static_cast<long long>(e.size());
  long long s = 0, z = 0;
  for (long long i = 0; i < n; ++i) {
    s += e[static_cast<std::size_t>(forward ? i : n - 1 - i)] ? 1 : -1;
    z = std::max(z, s < 0 ? -s : s);
  }
  if (z == 0) return 1.0;
  const double sn = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);
  double sum1 = 0, sum2 = 0;
  for (long long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k)
    sum1 += phi((4.0 * k + 1) * zd / sn) - phi((4.0 * k - 1) * zd / sn);
  for (long long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k)
    sum2 += phi((4.0 * k + 3) * zd / sn) - phi((4.0 * k + 1) * zd / sn);
  return 1.0 - sum1 + sum2;
}

/// Probability that a random rows x cols GF(2) matrix has rank r.
inline double rank_probability(std::size_t r, std::size_t rows, std::size_t cols) {
  double lp = static_cast<double>(r * (rows + cols - r)) - static_cast<double>(rows * cols);
  double prod = 1;
  for (std::size_t i = 0; i < r; ++i) {
    prod *= (1.0 - std::pow(2.0, static_cast<double>(i) - static_cast<double>(rows))) *
            (1.0 - std::pow(2.0, static_cast<double>(i) - static_cast<double>(cols))) /
            (1.0 - std::pow(2.0, static_cast<double>(i) - static_cast<double>(r)));
  }
  return std::pow(2.0, lp) * prod;
}

}  // namespace detail

inline TestResult monobit(const Bits& e, const Params& prm = {}) {
  detail::need(prm, "monobit", 100, e.size());
  long long s = 0;
  for (auto b : e) s += b ? 1 : -1;
  const double sobs = std::abs(static_cast<double>(s)) / std::sqrt(static_cast<double>(e.size()));
  return detail::make("monobit", detail::erfc(sobs / std::sqrt(2.0)), sobs, e.size());
}

inline TestResult block_frequency(const Bits& e, const Params& prm = {}) {
  const std::size_t m = prm.block_frequency_m;
  detail::need(prm, "block-frequency", std::max<std::size_t>(100, m), e.size());
  const std::size_t blocks = e.size() / m;
  if (blocks == 0) throw InsufficientDataError("block-frequency", m, e.size());
  double chi = 0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < m; ++j) ones += e[i * m + j];
    const double pi = static_cast<double>(ones) / static_cast<double>(m) - 0.5;
    chi += pi * pi;
  }
  chi *= 4.0 * static_cast<double>(m);
  return detail::make("block-frequency", detail::igamc(static_cast<double>(blocks) / 2, chi / 2), chi, e.size());
}

inline TestResult runs(const Bits& e, const Params& prm = {}) {
  detail::need(prm, "runs", 100, e.size());
  const double n = static_cast<double>(e.size());
  double ones = 0;
  for (auto b : e) ones += b;
  const double pi = ones / n;
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) return detail::make("runs", 0.0, 0.0, e.size());
  double v = 1;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) v += e[k] != e[k + 1];
  const double num = std::abs(v - 2 * n * pi * (1 - pi));
  const double den = 2 * std::sqrt(2 * n) * pi * (1 - pi);
  return detail::make("runs", detail::erfc(num / den), v, e.size());
}

inline TestResult longest_run(const Bits& e, const Params& prm = {}) {
  detail::need(prm, "longest-run", 128, e.size());
  std::size_t m;
  std::vector<std::size_t> bounds;  // class i holds runs <= bounds[i]; the last class is open
  std::vector<double> pi;
  if (e.size() < 6272) {
    m = 8;
    bounds = {1, 2, 3};
    pi = {0.2148, 0.3672, 0.2305, 0.1875};
  } else if (e.size() < 750000) {
    m = 128;
    bounds = {4, 5, 6, 7, 8};
    pi = {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124};
  } else {
    m = 10000;
    bounds = {10, 11, 12, 13, 14, 15};
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const std::size_t blocks = e.size() / m;
  std::vector<double> v(pi.size(), 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t run = 0, best = 0;
    for (std::size_t j = 0; j < m; ++j) {
      run = e[i * m + j] ? run + 1 : 0;
      best = std::max(best, run);
    }
    std::size_t cls = 0;
    while (cls < bounds.size() && best > bounds[cls]) ++cls;
    v[cls] += 1;
  }
  double chi = 0;
  const double nb = static_cast<double>(blocks);
  for (std::size_t i = 0; i < pi.size(); ++i) chi += (v[i] - nb * pi[i]) * (v[i] - nb * pi[i]) / (nb * pi[i]);
  return detail::make("longest-run", detail::igamc(static_cast<double>(pi.size() - 1) / 2, chi / 2), chi, e.size());
}

inline TestResult rank(const Bits& e, const Params& prm = {}) {
  constexpr std::size_t q = 32;
  detail::need(prm, "rank", 38 * q * q, e.size());
  const std::size_t blocks = e.size() / (q * q);
  if (blocks == 0) throw InsufficientDataError("rank", q * q, e.size());
  double full = 0, minus1 = 0;
  for (std::size_t i = 0; i < blocks; ++i) {
    gf2::BitMatrix a(q, q);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < q; ++c)
        if (e[i * q * q + r * q + c]) a.set(r, c);
    const std::size_t rk = gf2::rank(a);
    if (rk == q) full += 1;
    else if (rk == q - 1) minus1 += 1;
  }
  const double n = static_cast<double>(blocks);
  const double p32 = detail::rank_probability(q, q, q);
  const double p31 = detail::rank_probability(q - 1, q, q);
  const double p30 = 1 - p32 - p31;
  const double rest = n - full - minus1;
  const double chi = (full - p32 * n) * (full - p32 * n) / (p32 * n) + (minus1 - p31 * n) * (minus1 - p31 * n) / (p31 * n) +
                     (rest - p30 * n) * (rest - p30 * n) / (p30 * n);
  return detail::make("rank", std::exp(-chi / 2), chi, e.size());
}

inline TestResult cumulative_sums(const Bits& e, bool forward, const Params& prm = {}) {
  const std::string name = forward ? "cumulative-sums-forward" : "cumulative-sums-reverse";
  detail::need(prm, name, 100, e.size());
  return detail::make(name, detail::cusum_p(e, forward), 0.0, e.size());
}

/// Both serial p-values: index 0 from the first difference, 1 from the second.
inline std::array<TestResult, 2> serial(const Bits& e, const Params& prm = {}) {
  const std::size_t m = prm.serial_m;
  if (m < 2) throw DomainError("serial: pattern length must be >= 2");
  detail::need(prm, "serial", 100, e.size());
  const double p0 = detail::psi_sq(e, m), p1 = detail::psi_sq(e, m - 1), p2 = detail::psi_sq(e, m - 2);
  const double d1 = p0 - p1, d2 = p0 - 2 * p1 + p2;
  return {detail::make("serial-1", detail::igamc(std::pow(2.0, static_cast<double>(m) - 2), d1 / 2), d1, e.size()),
          detail::make("serial-2", detail::igamc(std::pow(2.0, static_cast<double>(m) - 3), d2 / 2), d2, e.size())};
}

inline TestResult approximate_entropy(const Bits& e, const Params& prm = {}) {
  const std::size_t m = prm.apen_m;
  detail::need(prm, "approximate-entropy", 100, e.size());
  const double apen = detail::apen_phi(e, m) - detail::apen_phi(e, m + 1);
  const double chi = 2.0 * static_cast<double>(e.size()) * (std::log(2.0) - apen);
  return detail::make("approximate-entropy", detail::igamc(std::pow(2.0, static_cast<double>(m) - 1), chi / 2), chi, e.size());
}

inline TestResult linear_complexity(const Bits& e, const Params& prm = {}) {
  const std::size_t m = prm.linear_complexity_m;
  detail::need(prm, "linear-complexity", 200 * m, e.size());
  const std::size_t blocks = e.size() / m;
  if (blocks == 0) throw InsufficientDataError("linear-complexity", m, e.size());
  const double md = static_cast<double>(m);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double mu = md / 2 + (9 + (m % 2 == 0 ? -1.0 : 1.0)) / 36 - (md / 3 + 2.0 / 9) / std::pow(2.0, md);
  static constexpr std::array<double, 7> pi{0.010417, 0.03125, 0.125, 0.5, 0.25, 0.0625, 0.020833};
  std::array<double, 7> v{};
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::span<const std::uint8_t> blk(e.data() + i * m, m);
    const double l = static_cast<double>(gf2::linear_complexity(blk));
    const double t = sign * (l - mu) + 2.0 / 9;
    std::size_t cls;
    if (t <= -2.5) cls = 0;
    else if (t <= -1.5) cls = 1;
    else if (t <= -0.5) cls = 2;
    else if (t <= 0.5) cls = 3;
    else if (t <= 1.5) cls = 4;
    else if (t <= 2.5) cls = 5;
    else cls = 6;
    v[cls] += 1;
  }
  const double n = static_cast<double>(blocks);
  double chi = 0;
  for (std::size_t i = 0; i < 7; ++i) chi += (v[i] - n * pi[i]) * (v[i] - n * pi[i]) / (n * pi[i]);
  return detail::make("linear-complexity", detail::igamc(3.0, chi / 2), chi, e.size());
}

/// One named result (see test_names()).
inline TestResult run_test(const std::string& name, const Bits& e, const Params& prm = {}) {
  if (name == "monobit") return monobit(e, prm);
  if (name == "block-frequency") return block_frequency(e, prm);
  if (name == "runs") return runs(e, prm);
  if (name == "longest-run") return longest_run(e, prm);
  if (name == "rank") return rank(e, prm);
  if (name == "cumulative-sums-forward") return cumulative_sums(e, true, prm);
  if (name == "cumulative-sums-reverse") return cumulative_sums(e, false, prm);
  if (name == "serial-1") return serial(e, prm)[0];
  if (name == "serial-2") return serial(e, prm)[1];
  if (name == "approximate-entropy") return approximate_entropy(e, prm);
  if (name == "linear-complexity") return linear_complexity(e, prm);
  throw DomainError("run_test: unknown test '" + name + "'");
}

/// Every implemented test in test_names() order.
inline std::vector<TestResult> run_battery(const Bits& e, const Params& prm = {}) {
  std::vector<TestResult> out;
  for (const auto& n : test_names()) {
    if (n == "serial-2") continue;
    if (n == "serial-1") {
      const auto s = serial(e, prm);
      out.push_back(s[0]);
      out.push_back(s[1]);
      continue;
    }
    out.push_back(run_test(n, e, prm));
  }
  return out;
}

/// Bits of 32-bit words, most significant bit first.
inline Bits bits_from_words(std::span<const std::uint32_t> words) {
  Bits out;
  out.reserve(words.size() * 32);
  for (auto w : words)
    for (int k = 31; k >= 0; --k) out.push_back(static_cast<std::uint8_t>((w >> k) & 1U));
  return out;
}

}  // namespace kdfc::randtests
