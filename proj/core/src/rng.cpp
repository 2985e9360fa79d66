// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/rng.hpp"

#include <cmath>

namespace zraf {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Stafford's mix13 finalizer.
std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
  key_ = mix64(mix64(seed ^ 0x5851F42D4C957F2DULL));
}

RngStream RngStream::split(std::uint64_t index) const {
  RngStream child;
  child.seed_ = seed_;
  child.path_ = path_;
  child.path_.push_back(index);
  child.key_ = mix64(mix64(key_ + kGolden * (index + 1)) ^ 0xD1B54A32D192ED03ULL);
  child.ctr_ = 0;
  return child;
}

std::uint64_t RngStream::next_u64() {
  ctr_ += 1;
  return mix64(key_ + ctr_ * kGolden);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::complex<double> RngStream::next_complex_gaussian() {
  const double u = next_double();
  const double v = next_double();
  const double t = -std::log1p(-u);  // Exp(1); u < 1 so this is finite
  const double theta = 6.283185307179586476925286766559 * v;
  const double r = std::sqrt(t);
  return {r * std::cos(theta), r * std::sin(theta)};
}

double RngStream::next_gaussian() {
  const double u = next_double();
  const double v = next_double();
  const double r = std::sqrt(-2.0 * std::log1p(-u));
  return r * std::cos(6.283185307179586476925286766559 * v);
}

}  // namespace zraf
