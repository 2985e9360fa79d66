// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/clt.hpp"

#include <cmath>
#include <stdexcept>

#include "zraf/parallel.hpp"
#include "zraf/roots.hpp"

namespace zraf {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

double kappa_from_wick(const WickCoeffs& wick) {
  double kappa = 0.0;
  for (std::uint32_t p = 1; p <= wick.max_order; ++p) {
    kappa += wick.ctilde_sq[p - 1] / (4.0 * kPi * p);
  }
  return kappa;
}

double sample_smooth_statistic(const HomPoly& q, Domain domain, double L,
                               const RadialBump& phi, RngStream& stream,
                               double rel_eps) {
  const GafSpec spec(domain, L);
  const double support = phi.support_radius();
  double cert;
  switch (domain) {
    case Domain::Plane: cert = support * 1.04 + 0.02; break;
    case Domain::Disk: cert = support + 0.3 * (1.0 - support); break;
    case Domain::Sphere: cert = support; break;
    default: cert = support;
  }
  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt > 200) throw std::runtime_error("sample_smooth_statistic: too many retries");
    RngStream sub = stream.split(attempt);
    std::vector<TruncatedSeries> fs;
    fs.reserve(q.arity());
    for (std::uint32_t i = 0; i < q.arity(); ++i) {
      fs.push_back(sample_gaf(spec, sub, cert, scaled_eps(spec, cert, rel_eps)));
    }
    TruncatedSeries F = q.arity() == 1 && q.degree() == 1
                            ? fs.front()
                            : polygaf_series(q, fs);
    auto res = zeros_in_disk(F, support, domain);
    if (res.flagged) continue;
    return smooth_statistic(res.zeros, phi);
  }
}

CltReport clt_experiment(const HomPoly& q, Domain domain,
                         const std::vector<double>& L_list, const RadialBump& phi,
                         RngStream& stream, std::size_t M,
                         std::size_t wick_samples, int threads) {
  if (L_list.empty() || M < 2) throw std::invalid_argument("clt_experiment: bad parameters");
  for (std::size_t i = 1; i < L_list.size(); ++i) {
    if (!(L_list[i] > L_list[i - 1])) {
      throw std::invalid_argument("clt_experiment: L list must increase");
    }
  }
  CltReport report;
  report.L = L_list;
  report.samples_per_L = M;
  report.phi_norm_sq = phi.invariant_laplacian_norm_sq(domain);

  RngStream wick_stream = stream.split(777);
  const std::uint32_t P = 6;
  const WickCoeffs wick = estimate_wick_coeffs(q, P, wick_stream, wick_samples, 8, threads);
  report.kappa_hat = kappa_from_wick(wick);
  double kse = 0.0;
  for (std::uint32_t p = 1; p <= P; ++p) {
    const double t = wick.ctilde_sq_se[p - 1] / (4.0 * kPi * p);
    kse += t * t;
  }
  report.kappa_hat_se = std::sqrt(kse);

  for (std::size_t li = 0; li < L_list.size(); ++li) {
    RngStream lstream = stream.split(1000 + li);
    std::vector<double> zs = parallel_map(
        M,
        [&](std::size_t rep) {
          RngStream sub = lstream.split(rep);
          return sample_smooth_statistic(q, domain, L_list[li], phi, sub);
        },
        threads);
    report.moments.push_back(sample_moments(zs));
    report.predicted_variance.push_back(report.kappa_hat / L_list[li] *
                                        report.phi_norm_sq);
  }
  return report;
}

}  // namespace zraf
