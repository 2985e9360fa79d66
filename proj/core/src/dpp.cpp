// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/dpp.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

#include "zraf/lapack.hpp"

namespace zraf {
namespace {

constexpr double kPi = 3.14159265358979323846;

cx ipow(cx base, long e) {
  cx acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

void check_domain_membership(const DppKernelSpec& spec, cx z) {
  if (spec.domain == Domain::Disk && std::abs(z) >= 1.0) {
    throw std::invalid_argument("disk kernel requires |z| < 1");
  }
}

}  // namespace

DppKernelSpec::DppKernelSpec(Domain d, double a) : domain(d), alpha(a) {
  if (!(alpha > 0)) throw std::invalid_argument("DppKernelSpec: alpha must be > 0");
  if (domain == Domain::Sphere &&
      std::abs(alpha - std::round(alpha)) > 1e-9) {
    throw std::invalid_argument("DppKernelSpec: sphere requires integer alpha");
  }
}

cx kernel_eval(const DppKernelSpec& spec, cx z, cx w) {
  check_domain_membership(spec, z);
  check_domain_membership(spec, w);
  const cx zw = z * std::conj(w);
  switch (spec.domain) {
    case Domain::Plane:
      return spec.alpha / kPi * std::exp(spec.alpha * zw);
    case Domain::Sphere:
      return spec.alpha / kPi * ipow(1.0 + zw, std::lround(spec.alpha) - 1);
    case Domain::Disk:
      return spec.alpha / kPi * std::exp(-(spec.alpha + 1.0) * std::log(1.0 - zw));
  }
  return {};
}

double reference_density(const DppKernelSpec& spec, cx z) {
  const double m2 = std::norm(z);
  switch (spec.domain) {
    case Domain::Plane: return std::exp(-spec.alpha * m2);
    case Domain::Sphere: return std::pow(1.0 + m2, -(spec.alpha + 1.0));
    case Domain::Disk: return std::pow(1.0 - m2, spec.alpha - 1.0);
  }
  return 0.0;
}

double dpp_intensity(const DppKernelSpec& spec, cx z) {
  return std::abs(kernel_eval(spec, z, z)) * reference_density(spec, z);
}

double normalized_kernel_sq(const DppKernelSpec& spec, cx z, cx w) {
  // Reference-measure densities cancel between numerator and denominator.
  const double num = std::norm(kernel_eval(spec, z, w));
  const double den = std::abs(kernel_eval(spec, z, z)) * std::abs(kernel_eval(spec, w, w));
  return num / den;
}

PointSet sample_ginibre_n(int n, RngStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_ginibre_n: n must be >= 1");
  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt > 200) throw std::runtime_error("sample_ginibre_n: eigensolver kept failing");
    RngStream sub = stream.split(attempt);
    std::vector<cx> a(static_cast<std::size_t>(n) * n);
    for (auto& v : a) v = sub.next_complex_gaussian();
    auto ev = lapack::eigenvalues(std::move(a), n);
    if (!ev) continue;
    PointSet out;
    out.domain = Domain::Plane;
    for (const auto& z : *ev) out.push_back(Point{z, false});
    out.meta.generator = "ginibre";
    out.meta.seed = stream.seed();
    out.meta.path = sub.path();
    out.meta.retries = attempt;
    return out;
  }
}

PointSet sample_det_sphere(int n, RngStream& stream) {
  MatrixGafSpec spec(n, GafSpec(Domain::Sphere, 1.0));
  PointSet ps = det_pencil_zeros(spec, stream);
  ps.meta.generator = "det-sphere";
  return ps;
}

std::vector<double> sample_radii_hyperbolic1(RngStream& stream, double r_max,
                                             int count_cap) {
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw std::invalid_argument("sample_radii_hyperbolic1: need 0 < r_max < 1");
  }
  // Remaining expected count past index N is r^{2(N+1)} / (1 - r^2).
  const double r2 = r_max * r_max;
  const int N = static_cast<int>(
      std::ceil((std::log(1e-12) + std::log1p(-r2)) / std::log(r2)));
  if (N > count_cap) {
    throw std::invalid_argument("sample_radii_hyperbolic1: count cap exceeded");
  }
  std::vector<double> out;
  for (int k = 1; k <= N; ++k) {
    const double u = stream.next_double();
    const double rho = std::pow(u, 1.0 / (2.0 * k));
    if (rho < r_max) out.push_back(rho);
  }
  return out;
}

RadialLaw RadialLaw::ginibre(int n) {
  if (n < 1) throw std::invalid_argument("RadialLaw::ginibre: n must be >= 1");
  RadialLaw law;
  law.domain = Domain::Plane;
  law.alpha = n;
  law.count = n;
  law.modulus_cdf = [](int k, double r) {
    return boost::math::gamma_p(static_cast<double>(k), r * r);
  };
  return law;
}

RadialLaw RadialLaw::hyperbolic1(double r_ref) {
  if (!(r_ref > 0.0 && r_ref < 1.0)) {
    throw std::invalid_argument("RadialLaw::hyperbolic1: need 0 < r_ref < 1");
  }
  RadialLaw law;
  law.domain = Domain::Disk;
  law.alpha = 1.0;
  const double r2 = r_ref * r_ref;
  law.count = static_cast<int>(
      std::ceil((std::log(1e-12) + std::log1p(-r2)) / std::log(r2)));
  law.modulus_cdf = [](int k, double r) { return std::pow(r, 2.0 * k); };
  return law;
}

std::vector<double> count_distribution_exact(const RadialLaw& law, double r) {
  if (!law.modulus_cdf) throw std::invalid_argument("count_distribution_exact: no radial law");
  std::vector<double> dist{1.0};
  for (int k = 1; k <= law.count; ++k) {
    const double p = law.modulus_cdf(k, r);
    dist.push_back(0.0);
    for (std::size_t m = dist.size() - 1; m-- > 0;) {
      dist[m + 1] += dist[m] * p;
      dist[m] *= (1.0 - p);
    }
  }
  return dist;
}

double expected_count(const RadialLaw& law, double r) {
  double s = 0.0;
  for (int k = 1; k <= law.count; ++k) s += law.modulus_cdf(k, r);
  return s;
}

double tail_probability(const std::vector<double>& dist, int m) {
  double s = 0.0;
  for (std::size_t k = static_cast<std::size_t>(std::max(m, 0)); k < dist.size(); ++k) {
    s += dist[k];
  }
  return std::min(1.0, s);
}

}  // namespace zraf
