// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace zraf::lapack {

using cx = std::complex<double>;

/// Eigenvalues of a dense complex n x n matrix (column-major buffer of
/// length n*n).  Returns nullopt if the QR iteration fails to converge.
std::optional<std::vector<cx>> eigenvalues(std::vector<cx> a, int n);

struct GeneralizedEigen {
  std::vector<cx> alpha;
  std::vector<cx> beta;
};

/// Generalized eigenvalues of the pencil (A, B): pairs (alpha_j, beta_j)
/// with det(A - (alpha_j/beta_j) B) = 0.  beta_j ~ 0 marks an infinite
/// eigenvalue.  Column-major buffers.
std::optional<GeneralizedEigen> generalized_eigenvalues(std::vector<cx> a,
                                                        std::vector<cx> b,
                                                        int n);

}  // namespace zraf::lapack
