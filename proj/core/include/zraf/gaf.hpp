// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zraf/point_set.hpp"
#include "zraf/rng.hpp"
#include "zraf/roots.hpp"
#include "zraf/series.hpp"

namespace zraf {

/// One of the three canonical Gaussian analytic function families, with
/// intensity parameter L:
///
///   Plane   f(z) = sum a_n sqrt(L^n / n!) z^n             (entire)
///   Sphere  f(z) = sum_{n<=L} a_n sqrt(binom(L, n)) z^n   (polynomial, L integer)
///   Disk    f(z) = sum a_n sqrt(binom(L+n-1, n)) z^n      (|z| < 1)
///
/// with a_n i.i.d. standard complex Gaussians.
struct GafSpec {
  Domain domain = Domain::Plane;
  double L = 1.0;

  GafSpec(Domain d, double l);
};

/// Deterministic coefficient weight sqrt(E|c_n|^2) of the family.
double coefficient_weight(const GafSpec& spec, int n);

/// Covariance kernel K(z, w) = E[f(z) conj(f(w))]:
/// exp(L z conj(w)), (1 + z conj(w))^L, (1 - z conj(w))^{-L}.
/// Disk requires |z|, |w| < 1.
cx covariance(const GafSpec& spec, cx z, cx w);

/// An absolute tail tolerance that is `rel` relative to the function's
/// own scale sqrt(K(r, r)) on |z| = r.
double scaled_eps(const GafSpec& spec, double radius, double rel);

/// Random coefficient series truncated so that the omitted tail is
/// certified below eps in sup norm on |z| <= radius.
///
/// The cutoff N is the smallest index with the analytic bound
/// sum_{n>N} w_n r^n <= eps/100 (a bound for E sup |tail|, since
/// E|a_n| < 1), and the realized coefficients at indices N+1..N+6 must
/// additionally satisfy |c_n| r^n < eps, else the cut moves out.  Sphere
/// specs are exact polynomials of degree L with tail_bound 0.
TruncatedSeries sample_gaf(const GafSpec& spec, RngStream& stream,
                           double radius, double eps);

/// Zero-counting intensity (1/4pi) Lap log K(z, z).  Evaluates the closed
/// form (L/pi, L/(pi (1+|z|^2)^2), L/(pi (1-|z|^2)^2)) and cross-checks it
/// against a Richardson-extrapolated five-point finite-difference
/// Laplacian; throws if the two disagree beyond `fd_tol`.
double edelman_kostlan_intensity(const GafSpec& spec, cx z,
                                 double fd_step = 1e-3, double fd_tol = 1e-4);

/// Closed form only (no finite-difference cross-check); cheap enough for
/// inner loops.
double intensity_closed_form(const GafSpec& spec, cx z);

/// Mean zero count in |z| <= r: the intensity integrated over the disk.
double expected_zero_count(const GafSpec& spec, double r);

/// Sample the zero set of the family in |z| <= r.  Flagged draws
/// (boundary-grazing roots, failed certification) are retried on child
/// substreams; the retry count lands in meta.
PointSet sample_gaf_zeros(const GafSpec& spec, RngStream& stream, double r,
                          double rel_eps = 1e-9);

/// Number of zeros in |z| <= r only, via the argument principle on the
/// truncated polynomial; no root extraction.  Used in the deep-tail Monte
/// Carlo loops where only counts matter.
int sample_gaf_zero_count(const GafSpec& spec, RngStream& stream, double r,
                          double rel_eps = 1e-9);

}  // namespace zraf
