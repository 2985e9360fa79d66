// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "zraf/bump.hpp"
#include "zraf/hypothesis.hpp"
#include "zraf/polygaf.hpp"
#include "zraf/wick.hpp"

namespace zraf {

/// Per-L moments of the linear statistic sum phi(zero) for the polygaf
/// Q(f_1, ..., f_k) over the family with growing intensity, plus the
/// predicted leading-order variance kappa(Q)/L * ||Lap* phi||^2_{L^2(m*)}
/// with kappa(Q) = sum_p |C~_p|^2 / (4 pi p).
struct CltReport {
  std::vector<double> L;
  std::vector<Moments> moments;
  std::vector<double> predicted_variance;
  double kappa_hat = 0.0;
  double kappa_hat_se = 0.0;
  double phi_norm_sq = 0.0;
  std::size_t samples_per_L = 0;
};

double kappa_from_wick(const WickCoeffs& wick);

/// One draw of the smooth statistic at parameter L.
double sample_smooth_statistic(const HomPoly& q, Domain domain, double L,
                               const RadialBump& phi, RngStream& stream,
                               double rel_eps = 1e-9);

CltReport clt_experiment(const HomPoly& q, Domain domain,
                         const std::vector<double>& L_list, const RadialBump& phi,
                         RngStream& stream, std::size_t M,
                         std::size_t wick_samples = 1000000, int threads = 0);

}  // namespace zraf
