// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/mobius.hpp"

#include <cmath>
#include <stdexcept>

namespace zraf {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

cx ipow(cx base, long e) {
  cx acc(1.0, 0.0);
  bool inv = e < 0;
  if (inv) e = -e;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return inv ? 1.0 / acc : acc;
}

}  // namespace

MobiusMap::MobiusMap(Domain d, cx a, cx b) : domain(d), alpha(a), beta(b) {
  const double tol = 1e-9;
  switch (d) {
    case Domain::Plane:
      if (std::abs(std::abs(a) - 1.0) > tol) {
        throw std::invalid_argument("plane isometry requires |alpha| = 1");
      }
      break;
    case Domain::Sphere:
      if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol) {
        throw std::invalid_argument("sphere isometry requires |a|^2 + |b|^2 = 1");
      }
      break;
    case Domain::Disk:
      if (std::abs(std::norm(a) - std::norm(b) - 1.0) > tol) {
        throw std::invalid_argument("disk isometry requires |a|^2 - |b|^2 = 1");
      }
      break;
  }
}

MobiusMap MobiusMap::identity(Domain d) { return MobiusMap(d, cx(1, 0), cx(0, 0)); }

MobiusMap MobiusMap::disk_translation(cx w) {
  if (std::abs(w) >= 1.0) throw std::invalid_argument("disk translation needs |w| < 1");
  const double a = 1.0 / std::sqrt(1.0 - std::norm(w));
  return MobiusMap(Domain::Disk, cx(a, 0.0), w * a);
}

cx mobius_apply(const MobiusMap& map, cx z) {
  switch (map.domain) {
    case Domain::Plane:
      return map.alpha * z + map.beta;
    case Domain::Sphere:
      return (map.alpha * z + map.beta) /
             (-std::conj(map.beta) * z + std::conj(map.alpha));
    case Domain::Disk:
      return (map.alpha * z + map.beta) /
             (std::conj(map.beta) * z + std::conj(map.alpha));
  }
  return z;
}

Point mobius_apply_point(const MobiusMap& map, const Point& p) {
  if (map.domain != Domain::Sphere) {
    if (p.at_infinity) throw std::invalid_argument("point at infinity outside sphere domain");
    return Point{mobius_apply(map, p.z), false};
  }
  if (p.at_infinity) {
    // limit of (a z + b)/(-conj(b) z + conj(a)) as z -> infinity
    if (std::abs(map.beta) == 0.0) return Point{cx(0, 0), true};
    return Point{-map.alpha / std::conj(map.beta), false};
  }
  const cx denom = -std::conj(map.beta) * p.z + std::conj(map.alpha);
  if (std::abs(denom) < 1e-300) return Point{cx(0, 0), true};
  return Point{(map.alpha * p.z + map.beta) / denom, false};
}

PointSet mobius_apply(const MobiusMap& map, const PointSet& ps) {
  PointSet out = ps;
  for (auto& p : out.points) p = mobius_apply_point(map, p);
  out.meta.certified_radius = 0.0;
  return out;
}

cx mobius_derivative(const MobiusMap& map, cx z) {
  switch (map.domain) {
    case Domain::Plane:
      return map.alpha;
    case Domain::Sphere: {
      const cx d = -std::conj(map.beta) * z + std::conj(map.alpha);
      return 1.0 / (d * d);
    }
    case Domain::Disk: {
      const cx d = std::conj(map.beta) * z + std::conj(map.alpha);
      return 1.0 / (d * d);
    }
  }
  return {};
}

cx mobius_cocycle(const MobiusMap& map, const GafSpec& spec, cx z) {
  if (map.domain != spec.domain) {
    throw std::invalid_argument("cocycle: map and spec domains differ");
  }
  switch (spec.domain) {
    case Domain::Plane:
      // exp(-L (alpha conj(beta) z + |beta|^2 / 2))
      return std::exp(-spec.L *
                      (map.alpha * std::conj(map.beta) * z + 0.5 * std::norm(map.beta)));
    case Domain::Sphere: {
      // phi'(z)^{-L/2} = (-conj(beta) z + conj(alpha))^L, entire in z
      const cx lin = -std::conj(map.beta) * z + std::conj(map.alpha);
      return ipow(lin, std::lround(spec.L));
    }
    case Domain::Disk: {
      // phi'(z)^{L/2} = (conj(beta) z + conj(alpha))^{-L}; the linear factor
      // stays in the disk around conj(alpha) of radius |beta| < |alpha|, so
      // log(lin / conj(alpha)) is single-valued; the branch is anchored at 0.
      const cx a = std::conj(map.alpha);
      const cx lin = std::conj(map.beta) * z + a;
      return std::exp(-spec.L * (std::log(a) + std::log(lin / a)));
    }
  }
  return {};
}

MobiusMap random_isometry(Domain d, RngStream& stream, double displacement) {
  const double theta = kTwoPi * stream.next_double();
  const cx rot(std::cos(theta), std::sin(theta));
  switch (d) {
    case Domain::Plane: {
      const cx b = displacement * stream.next_complex_gaussian();
      return MobiusMap(d, rot, b);
    }
    case Domain::Sphere: {
      // (alpha, beta) uniform on the unit sphere of C^2: Haar rotation.
      cx g1 = stream.next_complex_gaussian();
      cx g2 = stream.next_complex_gaussian();
      const double n = std::sqrt(std::norm(g1) + std::norm(g2));
      if (n == 0.0) return MobiusMap::identity(d);
      return MobiusMap(d, g1 / n, g2 / n);
    }
    case Domain::Disk: {
      // move 0 to a random point of modulus < displacement (capped in D)
      const double u = stream.next_double();
      const double cap = std::min(displacement, 0.95);
      const double r = cap * std::sqrt(u);
      const double psi = kTwoPi * stream.next_double();
      MobiusMap t = MobiusMap::disk_translation(r * cx(std::cos(psi), std::sin(psi)));
      return MobiusMap(d, t.alpha * rot, t.beta);
    }
  }
  return MobiusMap::identity(d);
}

}  // namespace zraf
