// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace zraf {

/// Evaluate fn(0..n-1) into a vector, distributing indices over a thread
/// pool.  Each slot is a pure function of its index, so the result is
/// independent of the thread count and of scheduling; reductions done in
/// index order afterwards stay bit-reproducible.
template <typename Fn>
auto parallel_map(std::size_t n, Fn&& fn, int threads = 0)
    -> std::vector<decltype(fn(std::size_t(0)))> {
  using R = decltype(fn(std::size_t(0)));
  std::vector<R> out(n);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        out[i] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace zraf
