// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zraf/lapack.hpp"

namespace zraf {
namespace {

constexpr double kPi = 3.14159265358979323846;

// p(z) and p'(z) in one Horner pass.
inline void horner2(const std::vector<cx>& c, cx z, cx& p, cx& dp) {
  p = c.back();
  dp = cx(0, 0);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

std::vector<cx> companion_roots(const std::vector<cx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<cx> m(static_cast<std::size_t>(d) * d, cx(0, 0));
  const cx lead = c.back();
  for (int i = 1; i < d; ++i) m[static_cast<std::size_t>(i) + std::size_t(d) * (i - 1)] = 1.0;
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) + std::size_t(d) * (d - 1)] = -c[i] / lead;
  auto ev = lapack::eigenvalues(m, d);
  if (!ev) throw std::runtime_error("companion eigensolver failed");
  return *ev;
}

// Initial points on circles read off the upper convex hull of
// (n, log|c_n|); each hull segment contributes its span's worth of
// points on the corresponding Newton-polygon radius.
std::vector<cx> aberth_initial(const std::vector<cx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<double> y(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double a = std::abs(c[i]);
    y[i] = a > 0 ? std::log(a) : -1e300;
  }
  std::vector<int> hull{0};
  for (int k = 1; k <= d; ++k) {
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2], j = hull.back();
      if ((y[j] - y[i]) * (k - j) <= (y[k] - y[j]) * (j - i)) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<cx> z;
  z.reserve(d);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int i = hull[s], j = hull[s + 1];
    const double r = std::exp((y[i] - y[j]) / (j - i));
    const int cnt = j - i;
    for (int t = 0; t < cnt; ++t) {
      const double ang = 2.0 * kPi * (t + 0.5) / cnt + 0.37 * (s + 1);
      z.push_back(r * cx(std::cos(ang), std::sin(ang)));
    }
  }
  return z;
}

std::vector<cx> aberth_roots(const std::vector<cx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<cx> z = aberth_initial(c);
  std::vector<cx> w(d);
  const int max_sweeps = 400;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      cx p, dp;
      horner2(c, z[i], p, dp);
      cx nt;
      if (p == cx(0, 0)) {
        nt = cx(0, 0);
      } else if (dp == cx(0, 0)) {
        nt = cx(1e-8, 1e-8);  // nudge off a critical point
      } else {
        nt = p / dp;
      }
      cx s(0, 0);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        const cx diff = z[i] - z[j];
        if (diff != cx(0, 0)) s += 1.0 / diff;
      }
      const cx denom = 1.0 - nt * s;
      cx corr = (denom == cx(0, 0)) ? nt : nt / denom;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

void newton_polish(const std::vector<cx>& c, cx& root, int steps) {
  for (int it = 0; it < steps; ++it) {
    cx p, dp;
    horner2(c, root, p, dp);
    if (dp == cx(0, 0)) return;
    const cx step = p / dp;
    root -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(root))) return;
  }
}

// Strip coefficients that are exactly zero at the top.
std::vector<cx> strip_leading_zeros(std::vector<cx> c) {
  while (c.size() > 1 && c.back() == cx(0, 0)) c.pop_back();
  return c;
}

}  // namespace

std::vector<cx> poly_roots(const std::vector<cx>& coeffs) {
  std::vector<cx> c = strip_leading_zeros(coeffs);
  if (c.empty() || (c.size() == 1 && c[0] == cx(0, 0))) {
    throw std::invalid_argument("poly_roots: zero polynomial");
  }
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 0) return {};
  if (d == 1) return {-c[0] / c[1]};
  // Rescale so the largest coefficient magnitude is 1; roots are unchanged.
  double cmax = 0.0;
  for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
  for (auto& v : c) v /= cmax;
  return d <= 90 ? companion_roots(c) : aberth_roots(c);
}

std::optional<int> winding_count(const std::vector<cx>& coeffs, double r) {
  std::vector<cx> c = strip_leading_zeros(coeffs);
  if (c.size() == 1) {
    if (c[0] == cx(0, 0)) throw std::invalid_argument("winding_count: zero polynomial");
    return 0;
  }
  for (int m = 512; m <= (1 << 16); m *= 2) {
    double total = 0.0;
    bool ok = true;
    cx p0, dp0;
    horner2(c, cx(r, 0.0), p0, dp0);
    if (p0 == cx(0, 0)) return std::nullopt;
    double prev = std::arg(p0);
    for (int k = 1; k <= m; ++k) {
      const double th = 2.0 * kPi * k / m;
      cx p, dp;
      horner2(c, r * cx(std::cos(th), std::sin(th)), p, dp);
      if (p == cx(0, 0)) return std::nullopt;
      const double a = std::arg(p);
      double d = a - prev;
      while (d > kPi) d -= 2.0 * kPi;
      while (d < -kPi) d += 2.0 * kPi;
      if (std::abs(d) > 0.5 * kPi) {
        ok = false;
        break;
      }
      total += d;
      prev = a;
    }
    if (!ok) continue;
    const double turns = total / (2.0 * kPi);
    const int n = static_cast<int>(std::lround(turns));
    if (std::abs(turns - n) < 0.01 && n >= 0) return n;
  }
  return std::nullopt;
}

ZerosResult zeros_in_disk(const TruncatedSeries& s, double r, Domain domain,
                          const ZeroFinderOptions& opt) {
  if (!(r <= s.radius * (1.0 + 1e-12))) {
    throw std::invalid_argument("zeros_in_disk: r exceeds series radius");
  }
  ZerosResult out;
  out.zeros.domain = domain;
  out.zeros.meta.certified_radius = std::isfinite(r) ? r : s.radius;

  std::vector<cx> roots = poly_roots(s.coeffs);
  for (auto& z : roots) newton_polish(s.coeffs, z, opt.newton_steps);

  std::vector<cx> inside;
  if (std::isfinite(r)) {
    const double delta = opt.boundary_margin_rel * r;
    for (const auto& z : roots) {
      const double a = std::abs(z);
      if (std::abs(a - r) < delta) {
        out.flagged = true;
        return out;
      }
      if (a <= r) inside.push_back(z);
    }
    const auto wind = winding_count(s.coeffs, r);
    if (!wind || *wind != static_cast<int>(inside.size())) {
      out.flagged = true;
      return out;
    }
  } else {
    inside = roots;
  }

  // Cluster coincident roots into one point with a multiplicity.
  std::vector<bool> used(inside.size(), false);
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (used[i]) continue;
    cx sum = inside[i];
    std::uint32_t m = 1;
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(inside[j] - inside[i]) < opt.cluster_tol) {
        used[j] = true;
        sum += inside[j];
        ++m;
      }
    }
    out.zeros.push_back(Point{sum / static_cast<double>(m), false}, m);
  }
  return out;
}

}  // namespace zraf
