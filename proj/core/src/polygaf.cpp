// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/polygaf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace zraf {

HomPoly::HomPoly(std::uint32_t arity, std::vector<Term> terms)
    : arity_(arity), terms_(std::move(terms)) {
  if (arity_ == 0) throw std::invalid_argument("HomPoly: arity must be >= 1");
  if (terms_.empty()) throw std::invalid_argument("HomPoly: no terms");
  bool nonzero = false;
  degree_ = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (t.exps.size() != arity_) throw std::invalid_argument("HomPoly: exponent arity mismatch");
    const std::uint32_t d = std::accumulate(t.exps.begin(), t.exps.end(), 0u);
    if (first) {
      degree_ = d;
      first = false;
    } else if (d != degree_) {
      throw std::invalid_argument("HomPoly: terms of unequal degree");
    }
    if (t.coeff != cx(0, 0)) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("HomPoly: all coefficients zero");
}

HomPoly HomPoly::zeta() { return HomPoly(1, {Term{{1}, cx(1, 0)}}); }

HomPoly HomPoly::product2() { return HomPoly(2, {Term{{1, 1}, cx(1, 0)}}); }

HomPoly HomPoly::power(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("power: degree must be >= 1");
  return HomPoly(1, {Term{{d}, cx(1, 0)}});
}

namespace {

void permutations_with_sign(std::uint32_t n,
                            const std::function<void(const std::vector<std::uint32_t>&, int)>& f) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  // Iterate all permutations, tracking parity by counting inversions.
  do {
    int inv = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    f(perm, (inv % 2 == 0) ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

HomPoly HomPoly::det(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("det: size must be >= 1");
  std::vector<Term> terms;
  permutations_with_sign(n, [&](const std::vector<std::uint32_t>& perm, int sign) {
    Term t;
    t.exps.assign(n * n, 0u);
    for (std::uint32_t i = 0; i < n; ++i) t.exps[i * n + perm[i]] = 1;
    t.coeff = cx(sign, 0);
    terms.push_back(std::move(t));
  });
  HomPoly q(n * n, std::move(terms));
  q.det_size_ = n;
  return q;
}

cx eval_hompoly(const HomPoly& q, std::span<const cx> values) {
  if (values.size() != q.arity()) throw std::invalid_argument("eval_hompoly: arity mismatch");
  cx acc(0, 0);
  for (const auto& t : q.terms()) {
    cx prod = t.coeff;
    for (std::uint32_t j = 0; j < q.arity(); ++j) {
      for (std::uint32_t e = 0; e < t.exps[j]; ++e) prod *= values[j];
    }
    acc += prod;
  }
  return acc;
}

cx eval_polygaf(const HomPoly& q, const std::vector<TruncatedSeries>& series, cx z) {
  if (series.size() != q.arity()) throw std::invalid_argument("eval_polygaf: arity mismatch");
  std::vector<cx> vals(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) vals[i] = evaluate(series[i], z);
  return eval_hompoly(q, vals);
}

namespace {

TruncatedSeries constant_series(cx c, double radius) {
  TruncatedSeries s;
  s.coeffs = {c};
  s.radius = radius;
  s.tail_bound = 0.0;
  return s;
}

TruncatedSeries det_series_small(const std::vector<TruncatedSeries>& e, std::uint32_t n,
                                 double radius) {
  const auto at = [&](std::uint32_t i, std::uint32_t j) -> const TruncatedSeries& {
    return e[i * n + j];
  };
  if (n == 1) return e[0];
  if (n == 2) {
    auto ad = series_mul(at(0, 0), at(1, 1));
    auto bc = series_mul(at(0, 1), at(1, 0));
    return series_add(ad, series_scale(bc, cx(-1, 0)));
  }
  // n == 3: cofactor expansion along the first row
  TruncatedSeries acc = constant_series(cx(0, 0), radius);
  for (std::uint32_t j = 0; j < 3; ++j) {
    std::vector<TruncatedSeries> minor;
    for (std::uint32_t r = 1; r < 3; ++r)
      for (std::uint32_t c = 0; c < 3; ++c)
        if (c != j) minor.push_back(at(r, c));
    auto m = det_series_small(minor, 2, radius);
    auto term = series_mul(at(0, j), m);
    acc = series_add(acc, series_scale(term, cx(j % 2 == 0 ? 1 : -1, 0)));
  }
  return acc;
}

}  // namespace

TruncatedSeries polygaf_series(const HomPoly& q,
                               const std::vector<TruncatedSeries>& series,
                               double tail_cap) {
  if (series.size() != q.arity()) throw std::invalid_argument("polygaf_series: arity mismatch");
  double radius = series.front().radius;
  for (const auto& s : series) radius = std::min(radius, s.radius);

  TruncatedSeries out;
  if (q.det_size() >= 1 && q.det_size() <= 3) {
    out = det_series_small(series, q.det_size(), radius);
  } else {
    out = constant_series(cx(0, 0), radius);
    for (const auto& t : q.terms()) {
      TruncatedSeries prod = constant_series(t.coeff, radius);
      for (std::uint32_t j = 0; j < q.arity(); ++j) {
        for (std::uint32_t e = 0; e < t.exps[j]; ++e) prod = series_mul(prod, series[j]);
      }
      out = series_add(out, prod);
    }
  }
  if (!(out.tail_bound <= tail_cap)) {
    throw std::runtime_error("polygaf_series: tail bound exceeds cap");
  }
  return out;
}

MatrixGafSpec::MatrixGafSpec(int size, GafSpec b) : n(size), base(b) {
  if (n < 1) throw std::invalid_argument("MatrixGafSpec: n must be >= 1");
}

}  // namespace zraf
