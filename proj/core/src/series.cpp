// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zraf {

cx evaluate(const TruncatedSeries& s, cx z) {
  if (s.coeffs.empty()) throw std::invalid_argument("evaluate: empty series");
  if (std::abs(z) > s.radius * (1.0 + 1e-12)) {
    throw std::invalid_argument("evaluate: |z| exceeds series radius");
  }
  cx acc = s.coeffs.back();
  for (std::size_t i = s.coeffs.size() - 1; i-- > 0;) {
    acc = acc * z + s.coeffs[i];
  }
  return acc;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  TruncatedSeries d;
  d.radius = s.radius;
  d.tail_bound = 0.0;
  if (s.coeffs.size() <= 1) {
    d.coeffs = {cx(0.0, 0.0)};
    return d;
  }
  d.coeffs.resize(s.coeffs.size() - 1);
  for (std::size_t n = 1; n < s.coeffs.size(); ++n) {
    d.coeffs[n - 1] = static_cast<double>(n) * s.coeffs[n];
  }
  return d;
}

double sup_norm_bound(const TruncatedSeries& s, double r) {
  double sum = 0.0, rn = 1.0;
  for (const auto& c : s.coeffs) {
    sum += std::abs(c) * rn;
    rn *= r;
  }
  return sum;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.radius = std::min(a.radius, b.radius);
  out.tail_bound = a.tail_bound + b.tail_bound;
  out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), cx(0, 0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, cx c) {
  TruncatedSeries out = a;
  for (auto& v : out.coeffs) v *= c;
  out.tail_bound = a.tail_bound * std::abs(c);
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.radius = std::min(a.radius, b.radius);
  const double r = out.radius;
  // |f g - pq| <= |f - p| sup|g| + |g - q| sup|p|, with sup|g| <= sup|q| + tail_g.
  // Exact factors keep an exact product even on an infinite radius.
  out.tail_bound = 0.0;
  if (a.tail_bound > 0.0) {
    out.tail_bound += a.tail_bound * (sup_norm_bound(b, r) + b.tail_bound);
  }
  if (b.tail_bound > 0.0) {
    out.tail_bound += b.tail_bound * sup_norm_bound(a, r);
  }
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, cx(0, 0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == cx(0, 0)) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

}  // namespace zraf
