// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "zraf/pencil.hpp"
#include "zraf/point_set.hpp"
#include "zraf/rng.hpp"

namespace zraf {

/// One of the three stationary determinantal families:
///   Det-C-a   K(z,w) = (a/pi) exp(a z conj(w)),      d mu = exp(-a|z|^2) dm
///   Det-S2-a  K(z,w) = (a/pi) (1 + z conj(w))^{a-1}, d mu = dm/(1+|z|^2)^{a+1}
///   Det-D-a   K(z,w) = (a/pi) (1 - z conj(w))^{-(a+1)}, d mu = (1-|z|^2)^{a-1} dm
/// (alpha a positive integer on the sphere; the sphere process has exactly
/// alpha points).
struct DppKernelSpec {
  Domain domain = Domain::Plane;
  double alpha = 1.0;

  DppKernelSpec(Domain d, double a);
};

/// The kernel in closed form (w.r.t. the family's reference measure).
cx kernel_eval(const DppKernelSpec& spec, cx z, cx w);

/// Density of the reference measure w.r.t. Lebesgue at z.
double reference_density(const DppKernelSpec& spec, cx z);

/// First intensity w.r.t. Lebesgue: K(z,z) * reference density.  Equals
/// alpha / (pi (1 +- |z|^2)^2) in all three families.
double dpp_intensity(const DppKernelSpec& spec, cx z);

/// Normalized squared kernel |K(z,w)|^2 / (K(z,z) K(w,w)); the two-point
/// correlation w.r.t. any reference measure is rho1(z) rho1(w) (1 - this).
double normalized_kernel_sq(const DppKernelSpec& spec, cx z, cx w);

/// Eigenvalues of an n x n i.i.d. standard complex Gaussian matrix.
PointSet sample_ginibre_n(int n, RngStream& stream);

/// Det-S2-n via the generalized eigenvalues of the pencil z A - B.
PointSet sample_det_sphere(int n, RngStream& stream);

/// Independent moduli of the unit-intensity disk family: rho_n =
/// U_n^{1/(2n)}, n = 1, 2, ...; returns those below r_max, with the index
/// range truncated once the remaining expected count drops under 1e-12.
/// Throws if the truncation index would exceed count_cap.
std::vector<double> sample_radii_hyperbolic1(RngStream& stream, double r_max,
                                             int count_cap = 1 << 20);

/// Rotation-invariant radial law with independent moduli: per-index CDF
/// of the modulus.  `count` is the number of indices (after truncation
/// for infinite families).
struct RadialLaw {
  Domain domain = Domain::Plane;
  double alpha = 1.0;
  std::function<double(int /*index >= 1*/, double /*r*/)> modulus_cdf;
  int count = 0;

  /// Ginibre-n: |point|^2 ~ Gamma(k, 1), k = 1..n.
  static RadialLaw ginibre(int n);
  /// Unit-intensity disk family: P[rho_k < r] = r^{2k}, truncated at
  /// remaining expected count < 1e-12 inside |z| <= r_ref.
  static RadialLaw hyperbolic1(double r_ref);
};

/// Exact distribution of #{moduli < r} as a Poisson-binomial over the
/// independent per-index indicators.  Element m of the result is
/// P[count = m].
std::vector<double> count_distribution_exact(const RadialLaw& law, double r);

/// Mean of the Poisson-binomial: sum of the per-index probabilities.
double expected_count(const RadialLaw& law, double r);

/// P[count >= m] from the exact distribution.
double tail_probability(const std::vector<double>& dist, int m);

}  // namespace zraf
