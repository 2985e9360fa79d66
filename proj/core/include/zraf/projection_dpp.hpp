// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "zraf/dpp.hpp"
#include "zraf/point_set.hpp"
#include "zraf/rng.hpp"

namespace zraf {

/// Finite orthonormal family psi_k(z) = c_k z^{k} w(|z|^2), k = 0..K-1,
/// orthonormal in L^2(Lebesgue) over its domain.  This radial-monomial
/// form covers the truncated Bargmann-Fock families and Ginibre; it also
/// makes the mixture (1/K) sum |psi_k|^2 exactly samplable, which the
/// sequential sampler uses as its proposal.
class ProjectionBasis {
 public:
  enum class Family { Plane, Sphere, Disk };

  Family family() const { return family_; }
  Domain domain_tag() const;
  int rank() const { return static_cast<int>(coeff_.size()); }
  double alpha() const { return alpha_; }

  /// psi_k(z) for all k.
  std::vector<cx> feature_vector(cx z) const;

  /// Diagonal sum_k |psi_k(z)|^2.
  double diagonal(cx z) const;

  /// Draw from the density |psi_k|^2 dm (radial part exact, angle uniform).
  cx sample_component(int k, RngStream& stream) const;

  /// Mass of the omitted basis tail inside the window (the truncation
  /// certificate for infinite families; 0 for sphere and Ginibre).
  double trace_error() const { return trace_error_; }
  /// Max |<psi_i, psi_j> - delta_ij| measured by quadrature at build time.
  double gram_error() const { return gram_error_; }

  /// Rank-K truncation of Det-C-alpha, certified on |z| <= window_radius.
  static ProjectionBasis det_plane(double alpha, int rank, double window_radius);
  /// Det-S2-n (exact, rank n).
  static ProjectionBasis det_sphere(int n);
  /// Rank-K truncation of Det-D-alpha, certified on |z| <= window_radius < 1.
  static ProjectionBasis det_disk(double alpha, int rank, double window_radius);
  /// Ginibre-n: the rank-n truncation of Det-C-1 (exact process).
  static ProjectionBasis ginibre(int n);

 private:
  ProjectionBasis() = default;
  void verify_gram();

  Family family_ = Family::Plane;
  double alpha_ = 1.0;
  std::vector<double> coeff_;  // c_k > 0
  double trace_error_ = 0.0;
  double gram_error_ = 0.0;
};

/// Exactly rank-many points of the determinantal process with kernel
/// sum psi_k(x) conj(psi_k(y)), by sequential conditional sampling:
/// propose from the diagonal intensity and accept with the ratio of the
/// remaining-subspace diagonal.  Throws if the configuration's rejection
/// rate exceeds 99.9% or the orthonormality certificate is bad.
PointSet sample_projection_dpp(const ProjectionBasis& basis, RngStream& stream);

}  // namespace zraf
