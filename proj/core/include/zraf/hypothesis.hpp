// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace zraf {

/// Survival function of the Kolmogorov distribution,
/// Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2).
double kolmogorov_q(double t);

struct KsResult {
  double statistic = 0.0;  // sup |F1 - F2|
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov with the asymptotic p-value; ties are
/// handled by comparing the empirical CDFs at the pooled jump points
/// (conservative for integer-valued data).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// One-sample KS against a CDF given as already-transformed U(0,1) values.
KsResult ks_uniform(std::vector<double> u);

struct Chi2Result {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Chi-square goodness of fit for equiprobable bins.
Chi2Result chi2_uniform(const std::vector<std::uint64_t>& counts);

/// Chi-square against given expected counts.
Chi2Result chi2_expected(const std::vector<std::uint64_t>& counts,
                         const std::vector<double>& expected);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = 1.959964);

/// Total variation distance between two distributions over {0, 1, ...}.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  std::size_t n = 0;
};

Moments sample_moments(const std::vector<double>& xs);

}  // namespace zraf
