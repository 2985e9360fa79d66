// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace zraf {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Plane: return "plane";
    case Domain::Sphere: return "sphere";
    case Domain::Disk: return "disk";
  }
  return "?";
}

Domain domain_from_name(const std::string& name) {
  if (name == "plane") return Domain::Plane;
  if (name == "sphere") return Domain::Sphere;
  if (name == "disk") return Domain::Disk;
  throw std::invalid_argument("unknown domain: " + name);
}

std::uint64_t PointSet::total_count() const {
  std::uint64_t n = 0;
  for (auto m : mult) n += m;
  return n;
}

void PointSet::push_back(const Point& p, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("multiplicity must be >= 1");
  points.push_back(p);
  mult.push_back(m);
}

std::uint64_t count_in_region(const PointSet& ps, const RegionPred& region) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (region(ps.points[i])) n += ps.mult[i];
  }
  return n;
}

RegionPred closed_disk(double r, cx center) {
  return [r, center](const Point& p) {
    return !p.at_infinity && std::abs(p.z - center) <= r;
  };
}

RegionPred whole_domain() {
  return [](const Point&) { return true; };
}

double sphere_height(const Point& p) {
  if (p.at_infinity) return 1.0;
  const double m2 = std::norm(p.z);
  return (m2 - 1.0) / (m2 + 1.0);
}

RegionPred spherical_cap(double h_min, double h_max) {
  return [h_min, h_max](const Point& p) {
    const double h = sphere_height(p);
    if (h >= 1.0 && h_max >= 1.0) return h_min <= 1.0;
    return h_min <= h && h < h_max;
  };
}

}  // namespace zraf
