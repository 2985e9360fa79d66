// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/projection_dpp.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace zraf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.283185307179586476925286766559;

double lbinom(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Gamma(shape, 1) variate as a sum of exponentials for integer shape.
double gamma_integer(int shape, RngStream& stream) {
  double s = 0.0;
  for (int i = 0; i < shape; ++i) s += -std::log1p(-stream.next_double());
  return s;
}

// Marsaglia-Tsang for real shape >= 1e-3 (the shape < 1 boost via U^{1/a}).
double gamma_real(double shape, RngStream& stream) {
  if (shape < 1.0) {
    const double u = stream.next_double();
    return gamma_real(shape + 1.0, stream) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = stream.next_gaussian();
    const double v0 = 1.0 + c * x;
    if (v0 <= 0.0) continue;
    const double v = v0 * v0 * v0;
    const double u = stream.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

Domain ProjectionBasis::domain_tag() const {
  switch (family_) {
    case Family::Plane: return Domain::Plane;
    case Family::Sphere: return Domain::Sphere;
    case Family::Disk: return Domain::Disk;
  }
  return Domain::Plane;
}

std::vector<cx> ProjectionBasis::feature_vector(cx z) const {
  const int K = rank();
  std::vector<cx> psi(K);
  const double u = std::norm(z);
  double logw = 0.0;
  switch (family_) {
    case Family::Plane: logw = -0.5 * alpha_ * u; break;
    case Family::Sphere: logw = -0.5 * (alpha_ + 1.0) * std::log1p(u); break;
    case Family::Disk: logw = 0.5 * (alpha_ - 1.0) * std::log1p(-u); break;
  }
  const double w = std::exp(logw);
  cx zk(1.0, 0.0);
  for (int k = 0; k < K; ++k) {
    psi[k] = coeff_[k] * zk * w;
    zk *= z;
  }
  return psi;
}

double ProjectionBasis::diagonal(cx z) const {
  double s = 0.0;
  for (const auto& v : feature_vector(z)) s += std::norm(v);
  return s;
}

cx ProjectionBasis::sample_component(int k, RngStream& stream) const {
  // |psi_k|^2 dm in polar coordinates: uniform angle, modulus-squared laws
  //   Plane : u ~ Gamma(k+1, 1/alpha)
  //   Sphere: u/(1+u) ~ Beta(k+1, n-k)
  //   Disk  : u ~ Beta(k+1, alpha)
  double u = 0.0;
  switch (family_) {
    case Family::Plane:
      u = gamma_integer(k + 1, stream) / alpha_;
      break;
    case Family::Sphere: {
      const int n = static_cast<int>(std::lround(alpha_));
      const double g1 = gamma_integer(k + 1, stream);
      const double g2 = gamma_integer(n - k, stream);
      const double v = g1 / (g1 + g2);
      u = v / (1.0 - v);
      break;
    }
    case Family::Disk: {
      const double g1 = gamma_integer(k + 1, stream);
      const double g2 = gamma_real(alpha_, stream);
      u = g1 / (g1 + g2);
      break;
    }
  }
  const double theta = kTwoPi * stream.next_double();
  const double r = std::sqrt(u);
  return r * cx(std::cos(theta), std::sin(theta));
}

void ProjectionBasis::verify_gram() {
  // Distinct monomial orders are orthogonal by symmetry; the radial
  // normalizations are what the certificate checks, by trapezoid
  // quadrature in the squared modulus.
  double worst = 0.0;
  for (int k = 0; k < rank(); ++k) {
    const int M = 20000;
    double sum = 0.0;
    double hi = 1.0;
    if (family_ == Family::Plane) hi = (rank() + 10.0 * std::sqrt(rank() + 1.0)) / alpha_;
    if (family_ == Family::Sphere) hi = 1.0;  // integrate in v = u/(1+u)
    const double h = hi / M;
    for (int i = 0; i < M; ++i) {
      const double t = (i + 0.5) * h;
      double integrand = 0.0;
      switch (family_) {
        case Family::Plane:
          integrand = std::exp(k * std::log(t) - alpha_ * t +
                               (k + 1) * std::log(alpha_) - std::lgamma(k + 1.0));
          break;
        case Family::Sphere: {
          const double u = t / (1.0 - t);
          const long n = std::lround(alpha_);
          integrand = std::exp(lbinom(n - 1.0, k) + std::log(alpha_ / 1.0) +
                               k * std::log(u) - (n + 1.0) * std::log1p(u)) /
                      ((1.0 - t) * (1.0 - t));
          break;
        }
        case Family::Disk:
          if (alpha_ >= 1.0) {
            integrand = std::exp(std::lgamma(k + alpha_ + 1.0) - std::lgamma(k + 1.0) -
                                 std::lgamma(alpha_) + k * std::log(t) +
                                 (alpha_ - 1.0) * std::log1p(-t));
          } else {
            // integrate in y = (1-t)^alpha to tame the endpoint
            const double base = 1.0 - std::pow(t, 1.0 / alpha_);
            integrand = std::exp(std::lgamma(k + alpha_ + 1.0) - std::lgamma(k + 1.0) -
                                 std::lgamma(alpha_ + 1.0) + k * std::log(base));
          }
          break;
      }
      sum += integrand * h;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  gram_error_ = worst;
  if (gram_error_ > 1e-3) {
    throw std::runtime_error("ProjectionBasis: orthonormality certificate failed");
  }
}

ProjectionBasis ProjectionBasis::det_plane(double alpha, int rank, double window_radius) {
  if (!(alpha > 0) || rank < 1) throw std::invalid_argument("det_plane: bad parameters");
  ProjectionBasis b;
  b.family_ = Family::Plane;
  b.alpha_ = alpha;
  b.coeff_.resize(rank);
  for (int k = 0; k < rank; ++k) {
    b.coeff_[k] = std::exp(0.5 * ((k + 1) * std::log(alpha) - std::log(kPi) -
                                  std::lgamma(k + 1.0)));
  }
  double err = 0.0;
  for (int k = rank; k < rank + 2000; ++k) {
    const double t = boost::math::gamma_p(k + 1.0, alpha * window_radius * window_radius);
    err += t;
    if (t < 1e-18) break;
  }
  b.trace_error_ = err;
  b.verify_gram();
  return b;
}

ProjectionBasis ProjectionBasis::det_sphere(int n) {
  if (n < 1) throw std::invalid_argument("det_sphere: n must be >= 1");
  ProjectionBasis b;
  b.family_ = Family::Sphere;
  b.alpha_ = n;
  b.coeff_.resize(n);
  for (int k = 0; k < n; ++k) {
    b.coeff_[k] = std::exp(0.5 * (std::log(n / kPi) + lbinom(n - 1.0, k)));
  }
  b.trace_error_ = 0.0;
  b.verify_gram();
  return b;
}

ProjectionBasis ProjectionBasis::det_disk(double alpha, int rank, double window_radius) {
  if (!(alpha > 0) || rank < 1 || !(window_radius < 1.0)) {
    throw std::invalid_argument("det_disk: bad parameters");
  }
  ProjectionBasis b;
  b.family_ = Family::Disk;
  b.alpha_ = alpha;
  b.coeff_.resize(rank);
  for (int k = 0; k < rank; ++k) {
    b.coeff_[k] = std::exp(0.5 * (std::lgamma(k + alpha + 1.0) - std::log(kPi) -
                                  std::lgamma(k + 1.0) - std::lgamma(alpha)));
  }
  double err = 0.0;
  const double u = window_radius * window_radius;
  for (int k = rank; k < rank + 20000; ++k) {
    const double t = boost::math::ibeta(k + 1.0, alpha, u);
    err += t;
    if (t < 1e-18) break;
  }
  b.trace_error_ = err;
  b.verify_gram();
  return b;
}

ProjectionBasis ProjectionBasis::ginibre(int n) { return det_plane(1.0, n, 1e9); }

PointSet sample_projection_dpp(const ProjectionBasis& basis, RngStream& stream) {
  const int K = basis.rank();
  PointSet out;
  out.domain = basis.domain_tag();

  // Orthonormal basis (columns) of the not-yet-hit part of the range.
  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Identity(K, K);
  std::uint64_t proposals = 0;

  for (int remaining = K; remaining >= 1; --remaining) {
    for (;;) {
      ++proposals;
      if (proposals > 1000ull * K + 100000ull) {
        throw std::runtime_error("sample_projection_dpp: rejection rate above 99.9%");
      }
      // Propose from the full diagonal K(x,x)/K via the component mixture.
      const std::uint64_t comp = stream.next_u64() % static_cast<std::uint64_t>(K);
      const cx x = basis.sample_component(static_cast<int>(comp), stream);
      const auto phi = basis.feature_vector(x);
      Eigen::Map<const Eigen::VectorXcd> phiv(phi.data(), K);
      const Eigen::VectorXcd proj = Q.leftCols(remaining).adjoint() * phiv;
      const double accept = proj.squaredNorm() / basis.diagonal(x);
      if (stream.next_double() >= accept) continue;

      out.push_back(Point{x, false});
      if (remaining > 1) {
        // Shrink the subspace: rotate so the hit direction is the last
        // column, then drop it (Householder on the projected coordinates).
        Eigen::VectorXcd v = proj;
        Eigen::MatrixXcd Qr = Q.leftCols(remaining);
        // Gram-Schmidt the complement of v within the current columns.
        const double vn = v.norm();
        if (vn > 0) {
          v /= vn;
          // Build an orthonormal basis of v-perp via Householder QR of [v].
          Eigen::MatrixXcd H = Eigen::MatrixXcd::Identity(remaining, remaining);
          Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(remaining);
          e0(0) = 1.0;
          Eigen::VectorXcd u = v - (v(0) == cx(0, 0) ? cx(1, 0) : v(0) / std::abs(v(0))) * e0;
          const double un = u.norm();
          if (un > 1e-14) {
            H -= 2.0 * (u / un) * (u / un).adjoint();
            // H maps v to a multiple of e0; columns 1..remaining-1 of Qr*H
            // span the orthogonal complement of v.
            Q.leftCols(remaining - 1) = Qr * H.rightCols(remaining - 1);
          } else {
            // v is already e0 (up to phase): drop the first column.
            Q.leftCols(remaining - 1) = Qr.rightCols(remaining - 1);
          }
        }
      }
      break;
    }
  }
  out.meta.generator = "projection-dpp";
  out.meta.seed = stream.seed();
  out.meta.path = stream.path();
  return out;
}

}  // namespace zraf
