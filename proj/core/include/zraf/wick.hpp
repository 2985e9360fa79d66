// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "zraf/gaf.hpp"
#include "zraf/polygaf.hpp"
#include "zraf/rng.hpp"

namespace zraf {

/// Wick (normal-ordered) monomial of one standard complex Gaussian:
/// :a^m conj(a)^n: = sum_r (-1)^r r! C(m,r) C(n,r) a^{m-r} conj(a)^{n-r}.
cx wick_monomial(cx a, int m, int n);

struct WickCoeffEstimate {
  std::vector<std::uint32_t> m, n;
  cx value{0, 0};
  double se = 0.0;
};

/// Monte Carlo estimates of the coefficients C_{m,n} of log|Q| in the
/// Wick basis, C_{m,n} = E[log|Q(a)| prod_j :conj(a_j)^{m_j} a_j^{n_j}:]
/// / sqrt(m! n!), together with the per-order sums
/// |C~_p|^2 = sum_{m. = n. = p} |C_{m,n}|^2 (debiased by the estimator
/// variance, so they can dip slightly below zero within error).
struct WickCoeffs {
  std::uint32_t arity = 1;
  std::uint32_t max_order = 0;        // P
  double c00 = 0.0;                   // E log|Q|, real
  double c00_se = 0.0;
  std::vector<double> ctilde_sq;      // index p = 1..P stored at p-1
  std::vector<double> ctilde_sq_se;
  std::vector<WickCoeffEstimate> raw; // all estimated (m, n) pairs
  std::size_t samples = 0;
  int phases = 8;
};

/// `phases` > 1 applies the phase-rotation average a -> lambda a over that
/// many roots of unity.  log|Q| is invariant by homogeneity while the Wick
/// monomial picks up lambda^{n.-m.}, so the average vanishes identically
/// unless m. = n. (mod phases); it is applied in closed form.  With
/// phases = 1 the raw single-draw estimator is used (for tests of the
/// selection rule itself).
WickCoeffs estimate_wick_coeffs(const HomPoly& q, std::uint32_t P,
                                RngStream& stream, std::size_t M,
                                int phases = 8, int threads = 0);

struct TwoPointResult {
  double value = 0.0;       // rho2(z, w) - rho1(z) rho1(w)
  bool truncation_ok = true;
  int orders_used = 0;
};

/// rho2 - rho1 rho1 from the order-p expansion
/// (1/4pi^2) Lap_z Lap_w sum_p |C~_p|^2 |Khat(z,w)|^{2p},
/// Khat = K(z,w)/sqrt(K(z,z) K(w,w)), by five-point finite differences
/// with one Richardson extrapolation.  The series is cut where
/// |C~_p|^2 sup|Khat|^{2p} < 1e-8; if the available orders end before
/// that, truncation_ok is false.
TwoPointResult two_point_from_formula(const WickCoeffs& wick, const GafSpec& spec,
                                      cx z, cx w, double fd_step = 1e-2);

}  // namespace zraf
