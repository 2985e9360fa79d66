// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/pencil.hpp"

#include <cmath>
#include <stdexcept>

#include "zraf/lapack.hpp"

namespace zraf {
namespace {

constexpr double kInfThreshold = 1e-12;

void cluster_into(PointSet& out, const std::vector<cx>& pts, double tol) {
  std::vector<bool> used(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    cx sum = pts[i];
    std::uint32_t m = 1;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!used[j] && std::abs(pts[j] - pts[i]) < tol) {
        used[j] = true;
        sum += pts[j];
        ++m;
      }
    }
    out.push_back(Point{sum / static_cast<double>(m), false}, m);
  }
}

}  // namespace

CMatrix random_gaussian_matrix(int n, RngStream& stream) {
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = stream.next_complex_gaussian();
  return m;
}

std::optional<PointSet> pencil_eigenvalues(const CMatrix& a, const CMatrix& b) {
  const int n = static_cast<int>(a.rows());
  // det(z A - B) = 0  <=>  det(B - z A) = 0, i.e. z is a generalized
  // eigenvalue of the pair (B, A).
  std::vector<cx> bb(b.data(), b.data() + n * n);
  std::vector<cx> aa(a.data(), a.data() + n * n);
  auto ge = lapack::generalized_eigenvalues(std::move(bb), std::move(aa), n);
  if (!ge) return std::nullopt;
  PointSet out;
  out.domain = Domain::Sphere;
  for (int i = 0; i < n; ++i) {
    cx al = ge->alpha[i], be = ge->beta[i];
    const double scale = std::max(std::abs(al), std::abs(be));
    if (scale > 0) {
      al /= scale;
      be /= scale;
    }
    if (std::abs(be) < kInfThreshold) {
      out.push_back(Point{cx(0, 0), true});
    } else {
      out.push_back(Point{al / be, false});
    }
  }
  return out;
}

PointSet det_pencil_zeros(const MatrixGafSpec& spec, RngStream& stream) {
  if (spec.base.domain != Domain::Sphere || std::lround(spec.base.L) != 1) {
    throw std::invalid_argument("det_pencil_zeros: base must be the sphere family with L = 1");
  }
  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt > 200) throw std::runtime_error("det_pencil_zeros: eigensolver kept failing");
    RngStream sub = stream.split(attempt);
    const CMatrix a = random_gaussian_matrix(spec.n, sub);
    const CMatrix b = random_gaussian_matrix(spec.n, sub);
    auto ps = pencil_eigenvalues(a, b);
    if (!ps) continue;
    ps->meta.generator = "det-pencil-sphere";
    ps->meta.seed = stream.seed();
    ps->meta.path = sub.path();
    ps->meta.retries = attempt;
    return *ps;
  }
}

cx det_pencil_at(const CMatrix& a, const CMatrix& b, cx z) {
  return (z * a - b).partialPivLu().determinant();
}

std::optional<PointSet> matrix_polynomial_zeros(const std::vector<CMatrix>& coeffs,
                                                double r, double boundary_margin_rel) {
  if (coeffs.size() < 2) throw std::invalid_argument("matrix_polynomial_zeros: need degree >= 1");
  const int n = static_cast<int>(coeffs.front().rows());
  const int N = static_cast<int>(coeffs.size()) - 1;
  const int dim = n * N;

  std::vector<cx> eigs;
  Eigen::PartialPivLU<CMatrix> lead(coeffs.back());
  if (lead.rcond() > 1e-10) {
    // Monic reduction: block companion with last block row -A_N^{-1} A_k.
    CMatrix comp = CMatrix::Zero(dim, dim);
    for (int b = 1; b < N; ++b) {
      comp.block((b - 1) * n, b * n, n, n) = CMatrix::Identity(n, n);
    }
    for (int k = 0; k < N; ++k) {
      comp.block((N - 1) * n, k * n, n, n) = -lead.solve(coeffs[k]);
    }
    std::vector<cx> buf(comp.data(), comp.data() + std::size_t(dim) * dim);
    auto ev = lapack::eigenvalues(std::move(buf), dim);
    if (!ev) return std::nullopt;
    eigs = std::move(*ev);
  } else {
    // Homogeneous first-companion pencil: det(Y + z X) with
    // X = diag(I, ..., I, A_N), Y carrying -I superdiagonal blocks and the
    // coefficient blocks in the last row; z solves det(-Y - z X) = 0.
    CMatrix X = CMatrix::Zero(dim, dim), Y = CMatrix::Zero(dim, dim);
    for (int b = 0; b + 1 < N; ++b) {
      X.block(b * n, b * n, n, n) = CMatrix::Identity(n, n);
      Y.block(b * n, (b + 1) * n, n, n) = -CMatrix::Identity(n, n);
    }
    X.block((N - 1) * n, (N - 1) * n, n, n) = coeffs.back();
    for (int k = 0; k < N; ++k) {
      Y.block((N - 1) * n, k * n, n, n) = coeffs[k];
    }
    CMatrix mY = -Y;
    std::vector<cx> ya(mY.data(), mY.data() + std::size_t(dim) * dim);
    std::vector<cx> xa(X.data(), X.data() + std::size_t(dim) * dim);
    auto ge = lapack::generalized_eigenvalues(std::move(ya), std::move(xa), dim);
    if (!ge) return std::nullopt;
    for (int i = 0; i < dim; ++i) {
      cx al = ge->alpha[i], be = ge->beta[i];
      const double scale = std::max(std::abs(al), std::abs(be));
      if (scale > 0) {
        al /= scale;
        be /= scale;
      }
      if (std::abs(be) < kInfThreshold) continue;  // infinite: outside any disk
      eigs.push_back(al / be);
    }
  }

  const double delta = boundary_margin_rel * r;
  std::vector<cx> inside;
  for (const auto& z : eigs) {
    const double a = std::abs(z);
    if (std::abs(a - r) < delta) return std::nullopt;
    if (a <= r) inside.push_back(z);
  }
  PointSet out;
  out.domain = Domain::Disk;
  out.meta.certified_radius = r;
  cluster_into(out, inside, 1e-8);
  return out;
}

int matrix_series_truncation(const MatrixGafSpec& spec, double r, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("matrix_series_truncation: eps must be > 0");
  // Smallest N with sum_{n>N} w_n r^n <= eps / 100, as in sample_gaf.
  int N = 0;
  for (;; ++N) {
    double sum = 0.0, term = coefficient_weight(spec.base, N + 1) * std::pow(r, N + 1);
    for (int n = N + 1; n < N + 100000; ++n) {
      sum += term;
      const double next = coefficient_weight(spec.base, n + 1) * std::pow(r, n + 1);
      if (term == 0.0) break;
      const double ratio = next / term;
      if (ratio < 0.5) {
        sum += next / (1.0 - ratio);
        break;
      }
      term = next;
    }
    if (sum <= 0.01 * eps) return N;
    if (N > 100000) throw std::runtime_error("matrix_series_truncation: diverged");
  }
}

PointSet matrix_series_zeros(const MatrixGafSpec& spec, RngStream& stream,
                             double r, double eps) {
  if (spec.base.domain != Domain::Disk) {
    throw std::invalid_argument("matrix_series_zeros: base must be a disk family");
  }
  if (!(r < 1.0)) throw std::invalid_argument("matrix_series_zeros: requires r < 1");

  const double cert = r + 0.4 * (1.0 - r);
  int N = matrix_series_truncation(spec, cert, eps);
  if (spec.n * N > 256) {
    throw std::invalid_argument("matrix_series_zeros: linearization size cap (256) exceeded");
  }

  for (std::uint32_t attempt = 0;; ++attempt) {
    if (attempt > 200) throw std::runtime_error("matrix_series_zeros: too many flagged draws");
    RngStream sub = stream.split(attempt);
    std::vector<CMatrix> coeffs;
    coeffs.reserve(N + 1);
    for (int k = 0; k <= N; ++k) {
      coeffs.push_back(coefficient_weight(spec.base, k) * random_gaussian_matrix(spec.n, sub));
    }
    // Entrywise realized-coefficient guard on six extra orders; a large
    // draw moves the cut outward, clean guards are checked and dropped.
    std::vector<CMatrix> pending;
    int clean = 0;
    while (clean < 6) {
      const int idx = static_cast<int>(coeffs.size() + pending.size());
      CMatrix g = coefficient_weight(spec.base, idx) * random_gaussian_matrix(spec.n, sub);
      const double worst = g.cwiseAbs().maxCoeff() * std::pow(cert, idx);
      pending.push_back(std::move(g));
      if (worst < eps) {
        ++clean;
      } else {
        for (auto& m : pending) coeffs.push_back(std::move(m));
        pending.clear();
        clean = 0;
      }
    }
    if (spec.n * (static_cast<int>(coeffs.size()) - 1) > 256) {
      throw std::invalid_argument("matrix_series_zeros: linearization size cap (256) exceeded");
    }
    auto ps = matrix_polynomial_zeros(coeffs, r);
    if (!ps) continue;
    ps->meta.generator = "matrix-series-disk";
    ps->meta.seed = stream.seed();
    ps->meta.path = sub.path();
    ps->meta.retries = attempt;
    return *ps;
  }
}

}  // namespace zraf
