// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zraf {

/// Splittable counter-based random stream.
///
/// A stream is addressed by (seed, path): `seed` is the user-facing root
/// seed and `path` is the sequence of split indices that produced this
/// stream.  The same (seed, path) yields the same output sequence on every
/// platform; streams with distinct paths are usable as independent.
///
/// Generation is counter mode over a 64-bit key derived by hashing the
/// path, with a SplitMix64-style finalizer as the output function.  State
/// is two words, so streams are cheap to copy and fan out.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Deterministic child stream; split(s, i) and split(s, j) produce
  /// unrelated sequences for i != j.  Does not advance this stream.
  RngStream split(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double();

  /// Standard complex Gaussian: density exp(-|z|^2)/pi, i.e. X + iY with
  /// X, Y independent N(0, 1/2).  Sampled as sqrt(Exp(1)) * e^{i Theta}
  /// with Theta uniform, which makes |a|^2 exactly Exp(1).
  std::complex<double> next_complex_gaussian();

  /// Real N(0,1).
  double next_gaussian();

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }

 private:
  RngStream() = default;

  std::uint64_t seed_ = 0;
  std::vector<std::uint64_t> path_;
  std::uint64_t key_ = 0;
  std::uint64_t ctr_ = 0;
};

}  // namespace zraf
