// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "zraf/point_set.hpp"
#include "zraf/series.hpp"

namespace zraf {

/// All complex roots of c_0 + c_1 z + ... + c_d z^d, unpolished and with
/// no multiplicity grouping.  Exact leading zeros are stripped (they only
/// lower the degree).  Throws on the zero polynomial.
///
/// Small degrees go through balanced companion-matrix eigenvalues;
/// large degrees (the dense Monte Carlo regimes) through Aberth-Ehrlich
/// iteration with convex-hull initial radii.  Both are followed by Newton
/// polishing in zeros_in_disk, and every accepted sample is certified
/// against the contour winding count, so the switch is invisible except
/// in running time.
std::vector<cx> poly_roots(const std::vector<cx>& coeffs);

/// Number of zeros of the polynomial strictly inside |z| = r by the
/// argument principle: total winding of f on the circle, by adaptive
/// phase tracking.  Returns nullopt when the phase increments cannot be
/// certified (a zero too close to the contour).
std::optional<int> winding_count(const std::vector<cx>& coeffs, double r);

struct ZerosResult {
  PointSet zeros;        // |z| <= r, multiplicities from clustering
  bool flagged = false;  // boundary proximity or failed certification
};

struct ZeroFinderOptions {
  double boundary_margin_rel = 1e-6;  // flag roots within delta = rel * r of |z| = r
  double cluster_tol = 1e-8;          // roots closer than this merge into one
  int newton_steps = 20;
};

/// Zeros of the truncated polynomial with |z| <= r (boundary inclusive),
/// Newton-polished and grouped with multiplicities.  r may be +infinity,
/// meaning all roots (used for sphere polynomials).  The root count inside
/// the contour is certified against winding_count; any mismatch or a root
/// within the boundary margin sets `flagged` and the caller is expected to
/// resample.  Throws on the zero polynomial.
ZerosResult zeros_in_disk(const TruncatedSeries& s, double r,
                          Domain domain = Domain::Plane,
                          const ZeroFinderOptions& opt = {});

}  // namespace zraf
