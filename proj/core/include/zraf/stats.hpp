// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "zraf/point_set.hpp"
#include "zraf/series.hpp"

namespace zraf {

/// Radially binned estimate with per-bin standard errors.  Bins are the
/// annuli between consecutive edges and partition the window.
struct BinnedEstimate {
  std::vector<double> edges;     // size bins + 1
  std::vector<double> value;
  std::vector<double> se;
  std::vector<double> bin_area;  // Lebesgue area of each annulus
  std::size_t samples = 0;

  std::size_t bins() const { return value.size(); }
};

std::vector<double> linear_edges(double lo, double hi, std::size_t bins);

/// Per-annulus zero/point intensity w.r.t. Lebesgue measure: mean count
/// over samples divided by bin area, with the standard error of the mean.
/// Points at infinity are not binned.  Requires >= 2 samples on a common
/// domain.
BinnedEstimate estimate_intensity(const std::vector<PointSet>& samples,
                                  const std::vector<double>& edges);

/// Two-point correlation by separation, from ordered distinct pairs whose
/// first member lies in the window eroded by the largest separation (so
/// the full annulus around it is observed).  With `pair_weight` set to
/// 1/(rho1(x) rho1(y)) the estimate targets rho2/(rho1 rho1) per bin.
BinnedEstimate estimate_pair_correlation(
    const std::vector<PointSet>& samples, const std::vector<double>& sep_edges,
    double window_radius,
    const std::function<double(cx, cx)>& pair_weight = nullptr);

/// The same binned functional applied to a closed-form g(z, w)
/// (rotation-invariant), by deterministic midpoint quadrature over
/// (|x|, s, relative angle).  Comparable bin-for-bin with the estimator
/// above when the same weight convention is used.
std::vector<double> predicted_pair_binned(
    const std::function<double(cx, cx)>& g, const std::vector<double>& sep_edges,
    double window_radius, int n_radial = 48, int n_sep = 16, int n_angle = 64);

/// Circle average of log|f| on |z| = rho by n-point trapezoid.
double circle_average_log_abs(const TruncatedSeries& s, double rho, int n = 512);

/// Jensen slack n(r) log(R/r) - [avg log|f| on R-circle - avg on r-circle];
/// nonpositive up to quadrature error for any analytic f.
double jensen_defect(const TruncatedSeries& s, int count_in_r, double r, double R,
                     int n = 512);

}  // namespace zraf
