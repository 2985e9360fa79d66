// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/hypothesis.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace zraf {

double kolmogorov_q(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 0.2) return 1.0;  // series converges slowly; Q is 1 to all digits
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  KsResult out;
  out.statistic = d;
  const double ne = na * nb / (na + nb);
  out.p_value = kolmogorov_q(std::sqrt(ne) * d);
  return out;
}

KsResult ks_uniform(std::vector<double> u) {
  if (u.empty()) throw std::invalid_argument("ks_uniform: empty sample");
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d = std::max(d, std::max((i + 1) / n - u[i], u[i] - i / n));
  }
  KsResult out;
  out.statistic = d;
  out.p_value = kolmogorov_q(std::sqrt(n) * d);
  return out;
}

Chi2Result chi2_expected(const std::vector<std::uint64_t>& counts,
                         const std::vector<double>& expected) {
  if (counts.size() != expected.size() || counts.size() < 2) {
    throw std::invalid_argument("chi2: need matching bins, at least 2");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!(expected[i] > 0)) throw std::invalid_argument("chi2: nonpositive expected count");
    const double d = static_cast<double>(counts[i]) - expected[i];
    stat += d * d / expected[i];
  }
  Chi2Result out;
  out.statistic = stat;
  out.dof = static_cast<int>(counts.size()) - 1;
  boost::math::chi_squared dist(out.dof);
  out.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  return out;
}

Chi2Result chi2_uniform(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  std::vector<double> expected(counts.size(),
                               static_cast<double>(total) / counts.size());
  return chi2_expected(counts, expected);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
  if (n == 0) throw std::invalid_argument("wilson_interval: n must be > 0");
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    s += std::abs(a - b);
  }
  return 0.5 * s;
}

Moments sample_moments(const std::vector<double>& xs) {
  Moments m;
  m.n = xs.size();
  if (xs.size() < 2) throw std::invalid_argument("sample_moments: need at least 2 values");
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / xs.size();
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double d = x - m.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  const double n = static_cast<double>(xs.size());
  m.variance = m2 / (n - 1.0);
  const double s2 = m2 / n;
  m.skewness = (m3 / n) / std::pow(s2, 1.5);
  m.excess_kurtosis = (m4 / n) / (s2 * s2) - 3.0;
  return m;
}

}  // namespace zraf
