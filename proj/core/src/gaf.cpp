// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/gaf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zraf {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_positive_integer(double x) {
  return x > 0 && std::abs(x - std::round(x)) < 1e-9;
}

cx ipow(cx base, long e) {
  cx acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

void check_in_domain(const GafSpec& spec, cx z) {
  if (spec.domain == Domain::Disk && std::abs(z) >= 1.0) {
    throw std::invalid_argument("disk spec requires |z| < 1");
  }
}

}  // namespace

GafSpec::GafSpec(Domain d, double l) : domain(d), L(l) {
  if (!(L > 0)) throw std::invalid_argument("GafSpec: L must be > 0");
  if (domain == Domain::Sphere && !is_positive_integer(L)) {
    throw std::invalid_argument("GafSpec: sphere requires integer L");
  }
}

double coefficient_weight(const GafSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("coefficient index must be >= 0");
  switch (spec.domain) {
    case Domain::Plane:
      return std::exp(0.5 * (n * std::log(spec.L) - std::lgamma(n + 1.0)));
    case Domain::Sphere: {
      const long Li = std::lround(spec.L);
      if (n > Li) return 0.0;
      return std::exp(0.5 * (std::lgamma(Li + 1.0) - std::lgamma(Li - n + 1.0) -
                             std::lgamma(n + 1.0)));
    }
    case Domain::Disk:
      return std::exp(0.5 * (std::lgamma(spec.L + n) - std::lgamma(spec.L) -
                             std::lgamma(n + 1.0)));
  }
  return 0.0;
}

cx covariance(const GafSpec& spec, cx z, cx w) {
  check_in_domain(spec, z);
  check_in_domain(spec, w);
  const cx zw = z * std::conj(w);
  switch (spec.domain) {
    case Domain::Plane:
      return std::exp(spec.L * zw);
    case Domain::Sphere:
      return ipow(1.0 + zw, std::lround(spec.L));
    case Domain::Disk:
      // 1 - z conj(w) has positive real part on the bidisk; the principal
      // branch is safe.
      return std::exp(-spec.L * std::log(1.0 - zw));
  }
  return {};
}

double scaled_eps(const GafSpec& spec, double radius, double rel) {
  const double r2 = radius * radius;
  double logK = 0.0;
  switch (spec.domain) {
    case Domain::Plane: logK = spec.L * r2; break;
    case Domain::Sphere: logK = spec.L * std::log1p(r2); break;
    case Domain::Disk: logK = -spec.L * std::log1p(-r2); break;
  }
  return rel * std::exp(0.5 * logK);
}

namespace {

// sum_{n > N} w_n r^n, closed off with a geometric bound once the term
// ratio drops below 1/2.
double analytic_tail(const GafSpec& spec, double r, int N) {
  double sum = 0.0;
  double term = coefficient_weight(spec, N + 1) * std::pow(r, N + 1);
  for (int n = N + 1; n < N + 200000; ++n) {
    sum += term;
    const double next = coefficient_weight(spec, n + 1) * std::pow(r, n + 1);
    if (term == 0.0) break;
    const double ratio = next / term;
    if (ratio < 0.5) {
      sum += next / (1.0 - ratio);
      break;
    }
    term = next;
  }
  return sum;
}

}  // namespace

TruncatedSeries sample_gaf(const GafSpec& spec, RngStream& stream,
                           double radius, double eps) {
  TruncatedSeries out;
  if (spec.domain == Domain::Sphere) {
    const int L = static_cast<int>(std::lround(spec.L));
    out.coeffs.resize(L + 1);
    for (int n = 0; n <= L; ++n) {
      out.coeffs[n] = stream.next_complex_gaussian() * coefficient_weight(spec, n);
    }
    out.radius = std::numeric_limits<double>::infinity();
    out.tail_bound = 0.0;
    return out;
  }
  if (!(eps > 0)) throw std::invalid_argument("sample_gaf: eps must be > 0");
  if (spec.domain == Domain::Disk && !(radius < 1.0)) {
    throw std::invalid_argument("sample_gaf: disk requires radius < 1");
  }
  int N = 0;
  while (analytic_tail(spec, radius, N) > 0.01 * eps) {
    ++N;
    if (N > 1000000) throw std::runtime_error("sample_gaf: truncation diverged");
  }
  out.radius = radius;
  out.coeffs.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    out.coeffs.push_back(stream.next_complex_gaussian() * coefficient_weight(spec, n));
  }
  // Realized-coefficient check on the next six terms; an unlucky large
  // draw moves the cut past it and restarts the window.
  std::vector<cx> pending;
  int clean = 0;
  while (clean < 6) {
    const int idx = N + static_cast<int>(pending.size()) + 1;
    const cx c = stream.next_complex_gaussian() * coefficient_weight(spec, idx);
    pending.push_back(c);
    if (std::abs(c) * std::pow(radius, idx) < eps) {
      ++clean;
    } else {
      out.coeffs.insert(out.coeffs.end(), pending.begin(), pending.end());
      N = idx;
      pending.clear();
      clean = 0;
    }
  }
  out.tail_bound = analytic_tail(spec, radius, N);
  return out;
}

double intensity_closed_form(const GafSpec& spec, cx z) {
  const double m2 = std::norm(z);
  switch (spec.domain) {
    case Domain::Plane: return spec.L / kPi;
    case Domain::Sphere: return spec.L / (kPi * (1.0 + m2) * (1.0 + m2));
    case Domain::Disk: return spec.L / (kPi * (1.0 - m2) * (1.0 - m2));
  }
  return 0.0;
}

double edelman_kostlan_intensity(const GafSpec& spec, cx z, double fd_step,
                                 double fd_tol) {
  check_in_domain(spec, z);
  const auto logK = [&](cx p) { return std::log(std::abs(covariance(spec, p, p))); };
  const auto lap = [&](double h) {
    return (logK(z + cx(h, 0)) + logK(z - cx(h, 0)) + logK(z + cx(0, h)) +
            logK(z - cx(0, h)) - 4.0 * logK(z)) /
           (h * h);
  };
  const double fd = (4.0 * lap(fd_step / 2) - lap(fd_step)) / 3.0;
  const double closed = intensity_closed_form(spec, z);
  const double via_fd = fd / (4.0 * kPi);
  if (std::abs(via_fd - closed) > fd_tol * std::max(1.0, std::abs(closed))) {
    throw std::runtime_error("edelman_kostlan_intensity: finite-difference check failed");
  }
  return closed;
}

double expected_zero_count(const GafSpec& spec, double r) {
  const double r2 = r * r;
  switch (spec.domain) {
    case Domain::Plane: return spec.L * r2;
    case Domain::Sphere: return spec.L * r2 / (1.0 + r2);
    case Domain::Disk: return spec.L * r2 / (1.0 - r2);
  }
  return 0.0;
}

PointSet sample_gaf_zeros(const GafSpec& spec, RngStream& stream, double r,
                          double rel_eps) {
  const double cert = (spec.domain == Domain::Sphere)
                          ? r
                          : (spec.domain == Domain::Disk ? r + 0.5 * (1.0 - r) * 0.5
                                                         : r * 1.05 + 0.05);
  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt > 200) throw std::runtime_error("sample_gaf_zeros: too many flagged draws");
    RngStream sub = stream.split(attempt);
    TruncatedSeries s;
    if (spec.domain == Domain::Sphere) {
      s = sample_gaf(spec, sub, r, 0.0 /*unused*/);
    } else {
      s = sample_gaf(spec, sub, cert, scaled_eps(spec, cert, rel_eps));
    }
    auto res = zeros_in_disk(s, r, spec.domain);
    if (res.flagged) continue;
    res.zeros.meta.generator = std::string("gaf-") + domain_name(spec.domain);
    res.zeros.meta.seed = stream.seed();
    res.zeros.meta.path = sub.path();
    res.zeros.meta.retries = attempt;
    return res.zeros;
  }
}

int sample_gaf_zero_count(const GafSpec& spec, RngStream& stream, double r,
                          double rel_eps) {
  const double cert = (spec.domain == Domain::Disk) ? r + 0.25 * (1.0 - r)
                                                    : r * 1.05 + 0.05;
  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt > 200) throw std::runtime_error("sample_gaf_zero_count: too many flagged draws");
    RngStream sub = stream.split(attempt);
    TruncatedSeries s = sample_gaf(spec, sub, cert, scaled_eps(spec, cert, rel_eps));
    const auto w = winding_count(s.coeffs, r);
    if (w) return *w;
  }
}

}  // namespace zraf
