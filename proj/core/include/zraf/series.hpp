// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "zraf/point_set.hpp"

namespace zraf {

/// Finite power series c_0 + c_1 z + ... + c_N z^N with a certificate for
/// the omitted tail: the true function it stands in for differs from the
/// stored polynomial by at most `tail_bound` in sup norm on |z| <= radius.
/// For exact polynomials (sphere samples, user input) tail_bound is 0.
struct TruncatedSeries {
  std::vector<cx> coeffs;
  double radius = 0.0;  // validity disk; may be +infinity
  double tail_bound = 0.0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Horner evaluation of the stored polynomial.  Requires |z| <= radius.
cx evaluate(const TruncatedSeries& s, cx z);

/// Derivative polynomial (tail bound is not propagated; the derivative is
/// used only for root polishing inside the validity disk).
TruncatedSeries derivative(const TruncatedSeries& s);

/// Sup of sum of |c_n| r^n; an upper bound for the polynomial on |z| <= r.
double sup_norm_bound(const TruncatedSeries& s, double r);

/// Sum and product with tail-bound propagation on the common radius.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, cx c);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace zraf
