// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zraf/gaf.hpp"
#include "zraf/point_set.hpp"
#include "zraf/rng.hpp"

namespace zraf {

/// An isometry of the plane, sphere or disk:
///   Plane   z -> alpha z + beta            (|alpha| = 1)
///   Sphere  z -> (alpha z + beta) / (-conj(beta) z + conj(alpha)),
///           |alpha|^2 + |beta|^2 = 1
///   Disk    z -> (alpha z + beta) / ( conj(beta) z + conj(alpha)),
///           |alpha|^2 - |beta|^2 = 1
struct MobiusMap {
  Domain domain = Domain::Plane;
  cx alpha{1.0, 0.0};
  cx beta{0.0, 0.0};

  MobiusMap(Domain d, cx a, cx b);
  static MobiusMap identity(Domain d);
  /// Disk isometry sending 0 to w (rotation part trivial).
  static MobiusMap disk_translation(cx w);
};

cx mobius_apply(const MobiusMap& map, cx z);
Point mobius_apply_point(const MobiusMap& map, const Point& p);
PointSet mobius_apply(const MobiusMap& map, const PointSet& ps);
cx mobius_derivative(const MobiusMap& map, cx z);

/// The deterministic non-vanishing factor D(z) with
/// |D(z)|^2 K(phi(z), phi(z)) = K(z, z) for the family's covariance
/// kernel, so that D * (f o phi) has the law of f.  For the disk with
/// non-integer L the principal branch anchored at z = 0 is used; only
/// |D| is observable through the kernel identity.
cx mobius_cocycle(const MobiusMap& map, const GafSpec& spec, cx z);

/// A Haar-ish random isometry for invariance testing (uniform rotation
/// composed with a random translation of bounded displacement).
MobiusMap random_isometry(Domain d, RngStream& stream, double displacement = 1.0);

}  // namespace zraf
