// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "zraf/point_set.hpp"

namespace zraf {

/// Compactly supported radial test function
///   phi(z) = (1 - |z - c|^2 / R^2)^3   on |z - c| <= R, 0 outside,
/// which is C^2 across the boundary with closed-form Laplacian
///   (12 / R^2) (1 - u) (3u - 1),  u = |z - c|^2 / R^2.
struct RadialBump {
  cx center{0.0, 0.0};
  double R = 1.0;

  double value(cx z) const;
  double laplacian(cx z) const;
  double support_radius() const { return std::abs(center) + R; }

  /// || Lap phi ||^2 w.r.t. Lebesgue measure: 96 pi / (5 R^2).
  double laplacian_norm_sq_plane() const;

  /// || Lap* phi ||^2_{L^2(m*)} for the invariant Laplacian and measure of
  /// the domain; closed form on the plane, radial quadrature on the sphere
  /// and disk (center must be 0 there).
  double invariant_laplacian_norm_sq(Domain domain) const;

  /// Integral of phi against Lebesgue measure: pi R^2 / 4.
  double integral_plane() const;
};

/// Sum of phi over the points with multiplicity.  Requires the support to
/// lie inside the sample's certified window when one is recorded.
double smooth_statistic(const PointSet& ps, const RadialBump& phi);

/// Same sum for an arbitrary functional (no window check).
double smooth_statistic(const PointSet& ps, const std::function<double(cx)>& phi);

}  // namespace zraf
