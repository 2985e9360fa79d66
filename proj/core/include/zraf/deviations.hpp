// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "zraf/dpp.hpp"
#include "zraf/gaf.hpp"

namespace zraf {

/// A process we can draw count-in-disk samples from.
struct CountGenerator {
  enum class Kind {
    PlanarGaf,        // zeros of the plane family, parameter L
    HyperbolicGaf,    // zeros of the disk family, parameter L
    HyperbolicRadii,  // independent radii of the unit-intensity disk family
    GinibreMatrix,    // eigenvalues of an n x n Gaussian matrix
    GinibreRadii,     // independent Kostlan radii of Ginibre-n
  };
  Kind kind = Kind::PlanarGaf;
  double L = 1.0;  // families
  int n = 1;       // matrix/radii sizes

  std::string name() const;
  /// Exact Poisson-binomial radial law, when one exists.
  bool has_exact_law() const;
  RadialLaw exact_law(double r) const;
};

int sample_count(const CountGenerator& gen, RngStream& stream, double r);

struct DeviationCurve {
  double r = 0.0;
  std::vector<int> m;
  std::vector<double> estimate;       // P[n(r) >= m]
  std::vector<double> lo, hi;         // Wilson interval (MC rows)
  std::vector<bool> exact;            // exact rows have lo = hi = estimate
  std::vector<double> exact_value;    // filled where an oracle exists
  std::vector<double> mc_dist;        // empirical count distribution
  std::size_t samples = 0;
};

/// Monte Carlo tail probabilities P[n(r) >= m] for m = 0..m_max with
/// Wilson intervals; where the generator has an exact radial law the
/// exact values are recorded alongside.  Requires M >= 30 * m_max-ish
/// resolution per the smallest target probability; rows whose estimate
/// is below 30/M are upper bounds only (hi carries the bound).
DeviationCurve overcrowding_curve(const CountGenerator& gen, double r, int m_max,
                                  RngStream& stream, std::size_t M, int threads = 0);

struct DeviationSlopeRow {
  double r = 0.0;
  int threshold = 0;      // smallest integer >= r^2 + gamma r^alpha
  double probability = 0.0;
  double lo = 0.0, hi = 0.0;
  bool resolved = false;  // false: below MC resolution, hi is a bound
  double loglog_slope = 0.0;  // log log (1/P) / log r, where defined
};

/// Planar-family overcrowding P[n(r) >= r^2 + gamma r^alpha] across radii,
/// with the empirical log-log slope for inspection.  Qualitative: the
/// hard guarantees are Wilson intervals and monotonicity, nothing more.
std::vector<DeviationSlopeRow> deviation_slope_experiment(
    const std::vector<double>& r_list, double alpha, double gamma,
    RngStream& stream, std::size_t M, int threads = 0);

}  // namespace zraf
