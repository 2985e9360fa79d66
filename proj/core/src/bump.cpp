// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace zraf {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

double RadialBump::value(cx z) const {
  const double u = std::norm(z - center) / (R * R);
  if (u >= 1.0) return 0.0;
  const double t = 1.0 - u;
  return t * t * t;
}

double RadialBump::laplacian(cx z) const {
  const double u = std::norm(z - center) / (R * R);
  if (u >= 1.0) return 0.0;
  return 12.0 / (R * R) * (1.0 - u) * (3.0 * u - 1.0);
}

double RadialBump::laplacian_norm_sq_plane() const {
  // 144/R^4 * pi R^2 * int_0^1 (1-u)^2 (3u-1)^2 du = 96 pi / (5 R^2)
  return 96.0 * kPi / (5.0 * R * R);
}

double RadialBump::invariant_laplacian_norm_sq(Domain domain) const {
  if (domain == Domain::Plane) return laplacian_norm_sq_plane();
  if (std::abs(center) != 0.0) {
    throw std::invalid_argument("invariant norm off-center only on the plane");
  }
  if (domain == Domain::Disk && !(R < 1.0)) {
    throw std::invalid_argument("disk bump must have R < 1");
  }
  // Lap* = (1 +- |z|^2)^2 Lap and dm* = dm / (1 +- |z|^2)^2, so the norm is
  // int (1 +- |z|^2)^2 (Lap phi)^2 dm; midpoint quadrature in u = r^2.
  const int M = 200000;
  double sum = 0.0;
  for (int i = 0; i < M; ++i) {
    const double u = (i + 0.5) / M;  // |z|^2 / R^2
    const double m2 = u * R * R;
    const double lap = 12.0 / (R * R) * (1.0 - u) * (3.0 * u - 1.0);
    const double conf = (domain == Domain::Sphere) ? (1.0 + m2) : (1.0 - m2);
    sum += conf * conf * lap * lap;
  }
  return sum * (R * R / M) * kPi;
}

double RadialBump::integral_plane() const { return kPi * R * R / 4.0; }

double smooth_statistic(const PointSet& ps, const RadialBump& phi) {
  if (ps.meta.certified_radius > 0.0 &&
      phi.support_radius() > ps.meta.certified_radius * (1.0 + 1e-12)) {
    throw std::invalid_argument("smooth_statistic: support exceeds certified window");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (ps.points[i].at_infinity) continue;
    s += phi.value(ps.points[i].z) * ps.mult[i];
  }
  return s;
}

double smooth_statistic(const PointSet& ps, const std::function<double(cx)>& phi) {
  double s = 0.0;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (ps.points[i].at_infinity) continue;
    s += phi(ps.points[i].z) * ps.mult[i];
  }
  return s;
}

}  // namespace zraf
