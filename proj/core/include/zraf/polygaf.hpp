// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zraf/gaf.hpp"
#include "zraf/series.hpp"

namespace zraf {

/// Homogeneous polynomial of degree d in k complex variables, as a sparse
/// term list.  Every exponent vector sums to d and at least one
/// coefficient is nonzero.
class HomPoly {
 public:
  struct Term {
    std::vector<std::uint32_t> exps;
    cx coeff;
  };

  HomPoly(std::uint32_t arity, std::vector<Term> terms);

  std::uint32_t arity() const { return arity_; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Set when built by det(): the matrix size n (arity n^2, degree n).
  std::uint32_t det_size() const { return det_size_; }

  static HomPoly zeta();                        // Q(z) = z
  static HomPoly product2();                    // Q(z1, z2) = z1 z2
  static HomPoly power(std::uint32_t d);        // Q(z) = z^d
  static HomPoly det(std::uint32_t n);          // determinant of an n x n matrix,
                                                // variable (i, j) at index i*n + j

 private:
  std::uint32_t arity_;
  std::uint32_t degree_;
  std::vector<Term> terms_;
  std::uint32_t det_size_ = 0;
};

/// Q applied to scalar values.
cx eval_hompoly(const HomPoly& q, std::span<const cx> values);

/// Q(f_1(z), ..., f_k(z)) at one point.
cx eval_polygaf(const HomPoly& q, const std::vector<TruncatedSeries>& series, cx z);

/// The composed series Q(f_1, ..., f_k) as a truncated polynomial with a
/// propagated tail bound.  Rejects when the bound exceeds `tail_cap`.
/// Determinants of size <= 3 go through cofactor expansion; everything
/// else through the term list.
TruncatedSeries polygaf_series(const HomPoly& q,
                               const std::vector<TruncatedSeries>& series,
                               double tail_cap = 1e280);

/// Matrix-valued analytic function: an n x n matrix of i.i.d. copies of
/// the base GAF.
struct MatrixGafSpec {
  int n = 1;
  GafSpec base;

  MatrixGafSpec(int size, GafSpec b);
};

}  // namespace zraf
