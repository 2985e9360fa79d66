#include <doctest.h>

#include <cmath>

#include "zraf/mobius.hpp"

using namespace zraf;

TEST_CASE("isometry constraints are validated") {
  CHECK_THROWS(MobiusMap(Domain::Plane, cx(2, 0), cx(0, 0)));
  CHECK_THROWS(MobiusMap(Domain::Sphere, cx(1, 0), cx(1, 0)));
  CHECK_THROWS(MobiusMap(Domain::Disk, cx(1, 0), cx(1, 0)));
}

TEST_CASE("identity cocycle is one") {
  for (auto d : {Domain::Plane, Domain::Sphere, Domain::Disk}) {
    const auto id = MobiusMap::identity(d);
    const GafSpec spec(d, 2);
    CHECK(std::abs(mobius_cocycle(id, spec, cx(0.25, 0.1)) - cx(1, 0)) < 1e-14);
    CHECK(mobius_apply(id, cx(0.3, -0.2)) == cx(0.3, -0.2));
  }
}

TEST_CASE("sphere inversion at L = 2 has unit cocycle modulus at z = 1") {
  // alpha = 0, beta = 1: phi(z) = -1/z, phi'(z) = 1/z^2
  const MobiusMap m(Domain::Sphere, cx(0, 0), cx(1, 0));
  const cx dphi = mobius_derivative(m, cx(1, 0));
  CHECK(std::abs(dphi - cx(1, 0)) < 1e-14);
  const cx d = mobius_cocycle(m, GafSpec(Domain::Sphere, 2), cx(1, 0));
  CHECK(std::norm(d) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cocycle satisfies the covariance identity") {
  RngStream s(9);
  for (int rep = 0; rep < 100; ++rep) {
    RngStream sub = s.split(rep);
    // Plane
    {
      const GafSpec spec(Domain::Plane, 1.5);
      const auto m = random_isometry(Domain::Plane, sub);
      const cx z = 1.3 * sub.next_complex_gaussian();
      const double lhs = std::norm(mobius_cocycle(m, spec, z)) *
                         std::abs(covariance(spec, mobius_apply(m, z), mobius_apply(m, z)));
      const double rhs = std::abs(covariance(spec, z, z));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
    }
    // Sphere
    {
      const GafSpec spec(Domain::Sphere, 3);
      const auto m = random_isometry(Domain::Sphere, sub);
      const cx z = sub.next_complex_gaussian();
      const double lhs = std::norm(mobius_cocycle(m, spec, z)) *
                         std::abs(covariance(spec, mobius_apply(m, z), mobius_apply(m, z)));
      const double rhs = std::abs(covariance(spec, z, z));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
    }
    // Disk, non-integer L exercises the branch handling
    {
      const GafSpec spec(Domain::Disk, 1.7);
      const auto m = random_isometry(Domain::Disk, sub, 0.8);
      const cx g = sub.next_complex_gaussian();
      const cx z = 0.85 * g / (1.0 + std::abs(g));
      const double lhs = std::norm(mobius_cocycle(m, spec, z)) *
                         std::abs(covariance(spec, mobius_apply(m, z), mobius_apply(m, z)));
      const double rhs = std::abs(covariance(spec, z, z));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("maps preserve their domains and send points correctly") {
  RngStream s(19);
  for (int rep = 0; rep < 50; ++rep) {
    RngStream sub = s.split(rep);
    const auto m = random_isometry(Domain::Disk, sub, 0.9);
    const cx g = sub.next_complex_gaussian();
    const cx z = 0.9 * g / (1.0 + std::abs(g));
    CHECK(std::abs(mobius_apply(m, z)) < 1.0);
  }
  // point at infinity maps to alpha / -conj(beta) on the sphere
  const MobiusMap rot(Domain::Sphere, cx(0, 0), cx(1, 0));
  const Point inf{cx(0, 0), true};
  const Point img = mobius_apply_point(rot, inf);
  CHECK(!img.at_infinity);
  CHECK(std::abs(img.z) < 1e-12);  // -alpha/conj(beta) = 0
}
