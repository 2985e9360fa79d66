// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/wick.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace zraf {
namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// All multi-indices over `k` variables with |m| = p.
void enumerate_fixed_sum(std::uint32_t k, std::uint32_t p,
                         std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> cur(k, 0);
  const std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t j,
                                                                    std::uint32_t left) {
    if (j == k - 1) {
      cur[j] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, p);
}

struct PairSpec {
  std::vector<std::uint32_t> m, n;
  std::uint32_t order = 0;  // m. (= n. when the phase average keeps it)
  double norm = 1.0;        // 1/sqrt(m! n!)
  bool killed = false;      // phase average vanishes identically
};

}  // namespace

cx wick_monomial(cx a, int m, int n) {
  const cx ac = std::conj(a);
  cx sum(0, 0);
  const int top = std::min(m, n);
  for (int r = 0; r <= top; ++r) {
    double c = factorial(r) * binom(m, r) * binom(n, r);
    if (r % 2 == 1) c = -c;
    cx term(c, 0.0);
    for (int i = 0; i < m - r; ++i) term *= a;
    for (int i = 0; i < n - r; ++i) term *= ac;
    sum += term;
  }
  return sum;
}

WickCoeffs estimate_wick_coeffs(const HomPoly& q, std::uint32_t P,
                                RngStream& stream, std::size_t M, int phases,
                                int threads) {
  if (M < 2) throw std::invalid_argument("estimate_wick_coeffs: M too small");
  const std::uint32_t k = q.arity();

  // Pair list: all (m, n) with m. <= P and n. <= P.  The diagonal-order
  // pairs feed |C~_p|^2; off-diagonal orders are kept so the selection
  // rule m. = n. is itself observable.
  std::vector<std::vector<std::vector<std::uint32_t>>> by_order(P + 1);
  std::size_t n_indices = 0;
  for (std::uint32_t p = 0; p <= P; ++p) {
    enumerate_fixed_sum(k, p, by_order[p]);
    n_indices += by_order[p].size();
  }
  std::vector<PairSpec> pairs;
  for (std::uint32_t pm = 0; pm <= P; ++pm) {
    for (std::uint32_t pn = 0; pn <= P; ++pn) {
      // The phase average multiplies the estimator by the mean of
      // lambda^{pn - pm} over the roots of unity: zero unless
      // pm = pn (mod phases), one otherwise.
      const bool killed =
          phases > 1 && (static_cast<int>(pm) - static_cast<int>(pn)) % phases != 0;
      for (const auto& m : by_order[pm]) {
        for (const auto& n : by_order[pn]) {
          PairSpec ps;
          ps.m = m;
          ps.n = n;
          ps.order = pm;
          double lognorm = 0.0;
          for (std::uint32_t j = 0; j < k; ++j) {
            lognorm += std::lgamma(m[j] + 1.0) + std::lgamma(n[j] + 1.0);
          }
          ps.norm = std::exp(-0.5 * lognorm);
          ps.killed = killed;
          pairs.push_back(std::move(ps));
        }
      }
    }
  }
  if (pairs.size() > 200000) {
    throw std::invalid_argument("estimate_wick_coeffs: coefficient set too large");
  }

  // Fixed block decomposition; results are reduced in block order, so the
  // thread count never changes the output.
  const int n_blocks = 64;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  const std::size_t n_pairs = pairs.size();

  struct BlockAcc {
    std::vector<cx> sum;
    std::vector<double> sumsq;  // of |per-draw value|^2
    double y_sum = 0.0, y_sumsq = 0.0;
    std::size_t draws = 0;
  };
  std::vector<BlockAcc> blocks(n_blocks);

  const auto run_block = [&](int b) {
    RngStream sub = stream.split(static_cast<std::uint64_t>(b));
    BlockAcc acc;
    acc.sum.assign(n_pairs, cx(0, 0));
    acc.sumsq.assign(n_pairs, 0.0);
    const std::size_t lo = M * b / n_blocks, hi = M * (b + 1) / n_blocks;
    std::vector<cx> a(k);
    // per-variable Wick monomial table w[j][m][n]
    std::vector<std::vector<std::vector<cx>>> w(
        k, std::vector<std::vector<cx>>(P + 1, std::vector<cx>(P + 1)));
    for (std::size_t it = lo; it < hi; ++it) {
      for (auto& v : a) v = sub.next_complex_gaussian();
      const double y = std::log(std::abs(eval_hompoly(q, a)));
      if (!std::isfinite(y)) continue;  // probability-zero degenerate draw
      acc.y_sum += y;
      acc.y_sumsq += y * y;
      for (std::uint32_t j = 0; j < k; ++j) {
        for (std::uint32_t m = 0; m <= P; ++m) {
          for (std::uint32_t n = 0; n <= P; ++n) {
            // conjugated first exponent, matching the coefficient formula
            w[j][m][n] = wick_monomial(std::conj(a[j]), static_cast<int>(m),
                                       static_cast<int>(n));
          }
        }
      }
      for (std::size_t i = 0; i < n_pairs; ++i) {
        if (pairs[i].killed) continue;
        cx prod(y, 0.0);
        for (std::uint32_t j = 0; j < k; ++j) prod *= w[j][pairs[i].m[j]][pairs[i].n[j]];
        prod *= pairs[i].norm;
        acc.sum[i] += prod;
        acc.sumsq[i] += std::norm(prod);
      }
      ++acc.draws;
    }
    blocks[b] = std::move(acc);
  };

  std::vector<std::thread> pool;
  std::size_t next = 0;
  std::mutex mu;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t mine;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= static_cast<std::size_t>(n_blocks)) return;
          mine = next++;
        }
        run_block(static_cast<int>(mine));
      }
    });
  }
  for (auto& t : pool) t.join();

  // Reduce in block order.
  std::vector<cx> sum(n_pairs, cx(0, 0));
  std::vector<double> sumsq(n_pairs, 0.0);
  double y_sum = 0.0, y_sumsq = 0.0;
  std::size_t draws = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < n_pairs; ++i) {
      sum[i] += b.sum[i];
      sumsq[i] += b.sumsq[i];
    }
    y_sum += b.y_sum;
    y_sumsq += b.y_sumsq;
    draws += b.draws;
  }

  WickCoeffs out;
  out.arity = k;
  out.max_order = P;
  out.samples = draws;
  out.phases = phases;
  const double N = static_cast<double>(draws);
  out.c00 = y_sum / N;
  out.c00_se = std::sqrt(std::max(0.0, y_sumsq / N - out.c00 * out.c00) / N);
  out.ctilde_sq.assign(P, 0.0);
  out.ctilde_sq_se.assign(P, 0.0);
  out.raw.reserve(n_pairs);
  std::vector<double> var_acc(P, 0.0);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    WickCoeffEstimate e;
    e.m = pairs[i].m;
    e.n = pairs[i].n;
    e.value = sum[i] / N;
    const double var = std::max(0.0, sumsq[i] / N - std::norm(e.value));
    e.se = std::sqrt(var / N);
    const std::uint32_t pm = pairs[i].order;
    std::uint32_t pn = 0;
    for (std::uint32_t j = 0; j < k; ++j) pn += e.n[j];
    if (pm == pn && pm >= 1 && pm <= P) {
      // debiased |C|^2 and its (delta-method) standard error
      out.ctilde_sq[pm - 1] += std::norm(e.value) - e.se * e.se;
      var_acc[pm - 1] += 4.0 * std::norm(e.value) * e.se * e.se;
    }
    out.raw.push_back(std::move(e));
  }
  for (std::uint32_t p = 1; p <= P; ++p) {
    out.ctilde_sq_se[p - 1] = std::sqrt(var_acc[p - 1]);
  }
  return out;
}

TwoPointResult two_point_from_formula(const WickCoeffs& wick, const GafSpec& spec,
                                      cx z, cx w, double fd_step) {
  if (std::abs(z - w) <= 10.0 * fd_step) {
    throw std::invalid_argument("two_point_from_formula: separation must exceed 10 fd steps");
  }
  const auto khat2 = [&](cx zz, cx ww) {
    const double num = std::norm(covariance(spec, zz, ww));
    const double den = std::abs(covariance(spec, zz, zz)) *
                       std::abs(covariance(spec, ww, ww));
    return num / den;
  };
  // Orders to keep: stop once |C~_p|^2 x_max^p < 1e-8 over the stencil.
  double x_max = 0.0;
  for (int dz = -2; dz <= 2; ++dz) {
    for (int dw = -2; dw <= 2; ++dw) {
      const cx zz = z + fd_step * cx(dz == 1 ? 1 : (dz == -1 ? -1 : 0),
                                     dz == 2 ? 1 : (dz == -2 ? -1 : 0));
      const cx ww = w + fd_step * cx(dw == 1 ? 1 : (dw == -1 ? -1 : 0),
                                     dw == 2 ? 1 : (dw == -2 ? -1 : 0));
      x_max = std::max(x_max, khat2(zz, ww));
    }
  }
  TwoPointResult res;
  int p_used = 0;
  for (std::uint32_t p = 1; p <= wick.max_order; ++p) {
    p_used = static_cast<int>(p);
    if (wick.ctilde_sq[p - 1] * std::pow(x_max, p) < 1e-8) break;
    if (p == wick.max_order) res.truncation_ok = false;  // ran out of orders
  }
  res.orders_used = p_used;

  const auto G = [&](cx zz, cx ww) {
    const double x = khat2(zz, ww);
    double s = 0.0, xp = x;
    for (int p = 1; p <= p_used; ++p) {
      s += wick.ctilde_sq[p - 1] * xp;
      xp *= x;
    }
    return s;
  };
  const auto lap2 = [&](double h) {
    const auto lw = [&](cx zz) {
      return (G(zz, w + cx(h, 0)) + G(zz, w - cx(h, 0)) + G(zz, w + cx(0, h)) +
              G(zz, w - cx(0, h)) - 4.0 * G(zz, w)) /
             (h * h);
    };
    return (lw(z + cx(h, 0)) + lw(z - cx(h, 0)) + lw(z + cx(0, h)) +
            lw(z - cx(0, h)) - 4.0 * lw(z)) /
           (h * h);
  };
  const double coarse = lap2(fd_step);
  const double fine = lap2(fd_step / 2);
  constexpr double kPi = 3.14159265358979323846;
  res.value = (4.0 * fine - coarse) / 3.0 / (4.0 * kPi * kPi);
  return res;
}

}  // namespace zraf
