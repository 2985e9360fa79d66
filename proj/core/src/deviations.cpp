// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/deviations.hpp"

#include <cmath>
#include <stdexcept>

#include "zraf/hypothesis.hpp"
#include "zraf/parallel.hpp"

namespace zraf {

std::string CountGenerator::name() const {
  switch (kind) {
    case Kind::PlanarGaf: return "planar-gaf";
    case Kind::HyperbolicGaf: return "hyperbolic-gaf";
    case Kind::HyperbolicRadii: return "hyperbolic-radii";
    case Kind::GinibreMatrix: return "ginibre";
    case Kind::GinibreRadii: return "ginibre-radii";
  }
  return "?";
}

bool CountGenerator::has_exact_law() const {
  switch (kind) {
    case Kind::HyperbolicRadii:
    case Kind::GinibreRadii:
    case Kind::GinibreMatrix:
      return true;
    case Kind::HyperbolicGaf:
      return std::abs(L - 1.0) < 1e-12;  // the L = 1 zeros are Det-D-1
    case Kind::PlanarGaf:
      return false;
  }
  return false;
}

RadialLaw CountGenerator::exact_law(double r) const {
  switch (kind) {
    case Kind::HyperbolicRadii:
      return RadialLaw::hyperbolic1(r);
    case Kind::HyperbolicGaf:
      if (std::abs(L - 1.0) < 1e-12) return RadialLaw::hyperbolic1(r);
      break;
    case Kind::GinibreMatrix:
    case Kind::GinibreRadii:
      return RadialLaw::ginibre(n);
    case Kind::PlanarGaf:
      break;
  }
  throw std::invalid_argument("exact_law: no radial oracle for this generator");
}

int sample_count(const CountGenerator& gen, RngStream& stream, double r) {
  switch (gen.kind) {
    case CountGenerator::Kind::PlanarGaf:
      return sample_gaf_zero_count(GafSpec(Domain::Plane, gen.L), stream, r);
    case CountGenerator::Kind::HyperbolicGaf:
      return sample_gaf_zero_count(GafSpec(Domain::Disk, gen.L), stream, r);
    case CountGenerator::Kind::HyperbolicRadii:
      return static_cast<int>(sample_radii_hyperbolic1(stream, r).size());
    case CountGenerator::Kind::GinibreMatrix: {
      PointSet ps = sample_ginibre_n(gen.n, stream);
      int c = 0;
      for (std::size_t i = 0; i < ps.points.size(); ++i) {
        if (!ps.points[i].at_infinity && std::abs(ps.points[i].z) <= r) {
          c += static_cast<int>(ps.mult[i]);
        }
      }
      return c;
    }
    case CountGenerator::Kind::GinibreRadii: {
      // independent moduli: R_k^2 ~ Gamma(k, 1), one fresh sum per index
      int c = 0;
      const double r2 = r * r;
      for (int k = 1; k <= gen.n; ++k) {
        double g = 0.0;
        for (int i = 0; i < k; ++i) g += -std::log1p(-stream.next_double());
        if (g < r2) ++c;
      }
      return c;
    }
  }
  return 0;
}

DeviationCurve overcrowding_curve(const CountGenerator& gen, double r, int m_max,
                                  RngStream& stream, std::size_t M, int threads) {
  if (M < 2 || m_max < 0) throw std::invalid_argument("overcrowding_curve: bad parameters");
  const std::vector<int> counts = parallel_map(
      M,
      [&](std::size_t rep) {
        RngStream sub = stream.split(rep);
        return sample_count(gen, sub, r);
      },
      threads);

  std::vector<double> dist;
  for (int c : counts) {
    if (c >= static_cast<int>(dist.size())) dist.resize(c + 1, 0.0);
    dist[c] += 1.0;
  }
  for (auto& d : dist) d /= static_cast<double>(M);

  DeviationCurve out;
  out.r = r;
  out.samples = M;
  out.mc_dist = dist;
  const bool oracle = gen.has_exact_law();
  std::vector<double> exact_dist;
  if (oracle) exact_dist = count_distribution_exact(gen.exact_law(r), r);
  const double resolution = 30.0 / static_cast<double>(M);
  for (int m = 0; m <= m_max; ++m) {
    std::uint64_t hits = 0;
    for (int c : counts) {
      if (c >= m) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(M);
    const auto iv = wilson_interval(hits, M, 3.0);
    out.m.push_back(m);
    out.estimate.push_back(p);
    out.lo.push_back(iv.lo);
    out.hi.push_back(iv.hi);
    out.exact.push_back(oracle);
    out.exact_value.push_back(oracle ? tail_probability(exact_dist, m) : 0.0);
    if (p < resolution && p > 0.0) {
      // below resolution: the interval is only an upper bound
      out.lo.back() = 0.0;
    }
  }
  return out;
}

std::vector<DeviationSlopeRow> deviation_slope_experiment(
    const std::vector<double>& r_list, double alpha, double gamma,
    RngStream& stream, std::size_t M, int threads) {
  std::vector<DeviationSlopeRow> rows;
  std::uint64_t split_base = 0;
  for (double r : r_list) {
    if (!(r > 0) || r > 3.0) {
      throw std::invalid_argument("deviation_slope_experiment: desk scale keeps r <= 3");
    }
    CountGenerator gen;
    gen.kind = CountGenerator::Kind::PlanarGaf;
    gen.L = 1.0;
    RngStream rstream = stream.split(split_base++);
    const std::vector<int> counts = parallel_map(
        M,
        [&](std::size_t rep) {
          RngStream sub = rstream.split(rep);
          return sample_count(gen, sub, r);
        },
        threads);
    const double threshold_real = r * r + gamma * std::pow(r, alpha);
    const int threshold = static_cast<int>(std::ceil(threshold_real - 1e-12));
    std::uint64_t hits = 0;
    for (int c : counts) {
      if (c >= threshold) ++hits;
    }
    DeviationSlopeRow row;
    row.r = r;
    row.threshold = threshold;
    row.probability = static_cast<double>(hits) / static_cast<double>(M);
    const auto iv = wilson_interval(hits, M, 3.0);
    row.lo = iv.lo;
    row.hi = iv.hi;
    row.resolved = row.probability * static_cast<double>(M) >= 30.0;
    if (row.probability > 0.0 && row.probability < 1.0 && std::log(r) != 0.0) {
      row.loglog_slope = std::log(std::log(1.0 / row.probability)) / std::log(r);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zraf
