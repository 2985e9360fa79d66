// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "zraf/polygaf.hpp"
#include "zraf/point_set.hpp"
#include "zraf/rng.hpp"

namespace zraf {

using CMatrix = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic>;

CMatrix random_gaussian_matrix(int n, RngStream& stream);

/// Singular points of z A - B, i.e. the n generalized eigenvalues of the
/// pencil, for A, B i.i.d. standard complex Gaussian matrices (the base
/// GAF must be the degree-one sphere family, L = 1).  Numerically
/// infinite eigenvalues (|beta| below 1e-12 after normalizing the
/// homogeneous pair) come back as explicit points at infinity, so the
/// result always carries exactly n entries with multiplicity.
PointSet det_pencil_zeros(const MatrixGafSpec& spec, RngStream& stream);

/// Same, for caller-provided matrices; nullopt when the eigensolver fails.
std::optional<PointSet> pencil_eigenvalues(const CMatrix& a, const CMatrix& b);

/// det(z A - B) evaluated by LU, for residual checks.
cx det_pencil_at(const CMatrix& a, const CMatrix& b, cx z);

/// Roots of det(A_0 + z A_1 + ... + z^N A_N) with |z| <= r, by the
/// first-companion linearization of size n*N and a dense eigensolve.
/// When the leading coefficient is comfortably invertible the monic
/// reduction runs through the standard eigenproblem; otherwise the
/// homogeneous pencil goes to the QZ solver.  Flagged results (boundary
/// proximity, solver failure) come back as nullopt.
std::optional<PointSet> matrix_polynomial_zeros(const std::vector<CMatrix>& coeffs,
                                                double r,
                                                double boundary_margin_rel = 1e-6);

/// Zeros in |z| <= r of det(A_0 + z A_1 + ...) with A_k i.i.d. coefficient
/// matrices of the base disk-domain GAF, truncated entrywise by the same
/// rule as sample_gaf at certification radius ~ midway between r and 1.
/// The linearization size n*N is capped at 256.
PointSet matrix_series_zeros(const MatrixGafSpec& spec, RngStream& stream,
                             double r, double eps);

/// Truncation order the sampler will use (exposed for tests/planning).
int matrix_series_truncation(const MatrixGafSpec& spec, double r, double eps);

}  // namespace zraf
