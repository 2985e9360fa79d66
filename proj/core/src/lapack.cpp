// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/lapack.hpp"

#include <stdexcept>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace zraf::lapack {

std::optional<std::vector<cx>> eigenvalues(std::vector<cx> a, int n) {
  if (n <= 0 || a.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("eigenvalues: bad dimensions");
  }
  std::vector<cx> w(n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n,
      reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1, nullptr, 1);
  if (info != 0) return std::nullopt;
  return w;
}

std::optional<GeneralizedEigen> generalized_eigenvalues(std::vector<cx> a,
                                                        std::vector<cx> b,
                                                        int n) {
  if (n <= 0 || a.size() != static_cast<std::size_t>(n) * n ||
      b.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("generalized_eigenvalues: bad dimensions");
  }
  GeneralizedEigen out;
  out.alpha.resize(n);
  out.beta.resize(n);
  const lapack_int info = LAPACKE_zggev(
      LAPACK_COL_MAJOR, 'N', 'N', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n,
      reinterpret_cast<lapack_complex_double*>(b.data()), n,
      reinterpret_cast<lapack_complex_double*>(out.alpha.data()),
      reinterpret_cast<lapack_complex_double*>(out.beta.data()),
      nullptr, 1, nullptr, 1);
  if (info != 0) return std::nullopt;
  return out;
}

}  // namespace zraf::lapack
