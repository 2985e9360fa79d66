// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zraf {

using cx = std::complex<double>;

enum class Domain { Plane, Sphere, Disk };

const char* domain_name(Domain d);
Domain domain_from_name(const std::string& name);

/// One point of a sample.  Sphere-domain samples may place points at
/// infinity (a degenerate leading coefficient); the flag is explicit
/// rather than encoded as a sentinel float.
struct Point {
  cx z{0.0, 0.0};
  bool at_infinity = false;
};

struct SampleMeta {
  std::string generator;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> path;
  std::uint32_t retries = 0;        // resamples forced by flagged draws
  double certified_radius = 0.0;    // 0 = unknown/not applicable
};

/// A finite multiset of points with a domain tag.  `mult[i]` >= 1 is the
/// multiplicity of `points[i]`.
struct PointSet {
  Domain domain = Domain::Plane;
  std::vector<Point> points;
  std::vector<std::uint32_t> mult;
  SampleMeta meta;

  std::size_t size() const { return points.size(); }
  /// Total number of points counted with multiplicity.
  std::uint64_t total_count() const;
  void push_back(const Point& p, std::uint32_t m = 1);
};

using RegionPred = std::function<bool(const Point&)>;

/// Sum of multiplicities of points satisfying the predicate.
std::uint64_t count_in_region(const PointSet& ps, const RegionPred& region);

/// Closed disk |z| <= r around `center`; boundary points count as inside.
/// Points at infinity are outside.
RegionPred closed_disk(double r, cx center = {0.0, 0.0});

/// Everything, including points at infinity.
RegionPred whole_domain();

/// Third coordinate of the stereographic image of z on the unit sphere,
/// in [-1, 1]; the point at infinity maps to +1.
double sphere_height(const Point& p);

/// Spherical cap {h_min <= sphere_height < h_max} (closed at +1).
RegionPred spherical_cap(double h_min, double h_max);

}  // namespace zraf
