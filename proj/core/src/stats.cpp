// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zraf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::size_t find_bin(const std::vector<double>& edges, double x) {
  // half-open [e_i, e_{i+1}), last bin closed
  if (x < edges.front() || x > edges.back()) return static_cast<std::size_t>(-1);
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - edges.begin());
  if (idx == 0) return static_cast<std::size_t>(-1);
  if (idx >= edges.size()) idx = edges.size() - 1;  // x == last edge
  return idx - 1;
}

}  // namespace

std::vector<double> linear_edges(double lo, double hi, std::size_t bins) {
  if (!(hi > lo) || bins == 0) throw std::invalid_argument("linear_edges: bad range");
  std::vector<double> e(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  return e;
}

BinnedEstimate estimate_intensity(const std::vector<PointSet>& samples,
                                  const std::vector<double>& edges) {
  if (samples.size() < 2) throw std::invalid_argument("estimate_intensity: need >= 2 samples");
  if (edges.size() < 2) throw std::invalid_argument("estimate_intensity: need >= 1 bin");
  const Domain dom = samples.front().domain;
  for (const auto& s : samples) {
    if (s.domain != dom) throw std::invalid_argument("estimate_intensity: mixed domains");
  }
  const std::size_t B = edges.size() - 1;
  std::vector<double> sum(B, 0.0), sumsq(B, 0.0);
  std::vector<double> counts(B);
  for (const auto& s : samples) {
    std::fill(counts.begin(), counts.end(), 0.0);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (s.points[i].at_infinity) continue;
      const std::size_t b = find_bin(edges, std::abs(s.points[i].z));
      if (b != static_cast<std::size_t>(-1)) counts[b] += s.mult[i];
    }
    for (std::size_t b = 0; b < B; ++b) {
      sum[b] += counts[b];
      sumsq[b] += counts[b] * counts[b];
    }
  }
  BinnedEstimate out;
  out.edges = edges;
  out.samples = samples.size();
  const double M = static_cast<double>(samples.size());
  out.value.resize(B);
  out.se.resize(B);
  out.bin_area.resize(B);
  for (std::size_t b = 0; b < B; ++b) {
    out.bin_area[b] = kPi * (edges[b + 1] * edges[b + 1] - edges[b] * edges[b]);
    const double mean = sum[b] / M;
    const double var = std::max(0.0, (sumsq[b] - M * mean * mean) / (M - 1.0));
    out.value[b] = mean / out.bin_area[b];
    out.se[b] = std::sqrt(var / M) / out.bin_area[b];
  }
  return out;
}

BinnedEstimate estimate_pair_correlation(
    const std::vector<PointSet>& samples, const std::vector<double>& sep_edges,
    double window_radius, const std::function<double(cx, cx)>& pair_weight) {
  if (samples.empty()) throw std::invalid_argument("estimate_pair_correlation: no samples");
  const double s_max = sep_edges.back();
  const double eroded = window_radius - s_max;
  if (!(eroded > 0)) {
    throw std::invalid_argument("estimate_pair_correlation: window too small for separations");
  }
  const std::size_t B = sep_edges.size() - 1;
  const double area_eroded = kPi * eroded * eroded;
  std::vector<double> sum(B, 0.0), sumsq(B, 0.0), acc(B);
  for (const auto& s : samples) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (s.points[i].at_infinity) continue;
      const cx x = s.points[i].z;
      if (std::abs(x) > eroded) continue;
      for (std::size_t j = 0; j < s.points.size(); ++j) {
        if (j == i) {
          // distinct ordered pairs within a multiplicity-m point: m(m-1)
          if (s.mult[i] > 1 && sep_edges.front() <= 0.0) {
            const double w = pair_weight ? pair_weight(x, x) : 1.0;
            acc[0] += static_cast<double>(s.mult[i]) * (s.mult[i] - 1.0) * w;
          }
          continue;
        }
        if (s.points[j].at_infinity) continue;
        const cx y = s.points[j].z;
        const std::size_t b = find_bin(sep_edges, std::abs(x - y));
        if (b == static_cast<std::size_t>(-1)) continue;
        const double w = pair_weight ? pair_weight(x, y) : 1.0;
        acc[b] += static_cast<double>(s.mult[i]) * static_cast<double>(s.mult[j]) * w;
      }
    }
    for (std::size_t b = 0; b < B; ++b) {
      sum[b] += acc[b];
      sumsq[b] += acc[b] * acc[b];
    }
  }
  BinnedEstimate out;
  out.edges = sep_edges;
  out.samples = samples.size();
  const double M = static_cast<double>(samples.size());
  out.value.resize(B);
  out.se.resize(B);
  out.bin_area.resize(B);
  for (std::size_t b = 0; b < B; ++b) {
    out.bin_area[b] =
        kPi * (sep_edges[b + 1] * sep_edges[b + 1] - sep_edges[b] * sep_edges[b]);
    const double norm = area_eroded * out.bin_area[b];
    const double mean = sum[b] / M;
    const double var = M > 1 ? std::max(0.0, (sumsq[b] - M * mean * mean) / (M - 1.0)) : 0.0;
    out.value[b] = mean / norm;
    out.se[b] = std::sqrt(var / M) / norm;
  }
  return out;
}

std::vector<double> predicted_pair_binned(const std::function<double(cx, cx)>& g,
                                          const std::vector<double>& sep_edges,
                                          double window_radius, int n_radial,
                                          int n_sep, int n_angle) {
  const double s_max = sep_edges.back();
  const double eroded = window_radius - s_max;
  if (!(eroded > 0)) throw std::invalid_argument("predicted_pair_binned: window too small");
  const std::size_t B = sep_edges.size() - 1;
  std::vector<double> out(B, 0.0);
  for (std::size_t b = 0; b < B; ++b) {
    const double s0 = sep_edges[b], s1 = sep_edges[b + 1];
    double num = 0.0, den = 0.0;
    for (int ir = 0; ir < n_radial; ++ir) {
      const double rho = eroded * (ir + 0.5) / n_radial;
      const double wr = rho;  // polar Jacobian in x
      for (int is = 0; is < n_sep; ++is) {
        const double s = s0 + (s1 - s0) * (is + 0.5) / n_sep;
        for (int ia = 0; ia < n_angle; ++ia) {
          const double psi = kTwoPi * (ia + 0.5) / n_angle;
          const cx x(rho, 0.0);
          const cx y = x + s * cx(std::cos(psi), std::sin(psi));
          const double w = wr * s;
          num += w * g(x, y);
          den += w;
        }
      }
    }
    out[b] = num / den;
  }
  return out;
}

double circle_average_log_abs(const TruncatedSeries& s, double rho, int n) {
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = kTwoPi * k / n;
    const cx z = rho * cx(std::cos(th), std::sin(th));
    sum += std::log(std::abs(evaluate(s, z)));
  }
  return sum / n;
}

double jensen_defect(const TruncatedSeries& s, int count_in_r, double r, double R,
                     int n) {
  if (!(r < R)) throw std::invalid_argument("jensen_defect: need r < R");
  const double rhs = circle_average_log_abs(s, R, n) - circle_average_log_abs(s, r, n);
  return count_in_r * std::log(R / r) - rhs;
}

}  // namespace zraf
