#include <doctest.h>

#include <cmath>

#include "zraf/hypothesis.hpp"
#include "zraf/pencil.hpp"

using namespace zraf;

TEST_CASE("pencil: n = 1 gives the ratio point, uniform on the sphere") {
  MatrixGafSpec spec(1, GafSpec(Domain::Sphere, 1));
  RngStream s(7);
  const int M = 100000;
  std::vector<std::uint64_t> bins(24, 0);
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    const auto ps = det_pencil_zeros(spec, sub);
    REQUIRE(ps.total_count() == 1);
    // stereographic height is uniform on [-1, 1] for the uniform law
    const double h = sphere_height(ps.points[0]);
    auto b = static_cast<std::size_t>((h + 1.0) / 2.0 * 24);
    if (b >= 24) b = 23;
    ++bins[b];
  }
  CHECK(chi2_uniform(bins).p_value > 0.01);
}

TEST_CASE("pencil: exactly n points with multiplicity") {
  MatrixGafSpec spec(3, GafSpec(Domain::Sphere, 1));
  RngStream s(13);
  for (int i = 0; i < 50; ++i) {
    RngStream sub = s.split(i);
    CHECK(det_pencil_zeros(spec, sub).total_count() == 3);
  }
}

TEST_CASE("pencil: mean count in the unit disk is n/2") {
  // intensity integral n r^2/(1+r^2) = 2 at r = 1, n = 4
  MatrixGafSpec spec(4, GafSpec(Domain::Sphere, 1));
  RngStream s(17);
  const int M = 100000;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    const auto ps = det_pencil_zeros(spec, sub);
    double c = 0;
    for (std::size_t p = 0; p < ps.points.size(); ++p) {
      if (!ps.points[p].at_infinity && std::abs(ps.points[p].z) <= 1.0) c += ps.mult[p];
    }
    sum += c;
    sumsq += c * c;
  }
  const double mean = sum / M;
  const double se = std::sqrt(((sumsq - M * mean * mean) / (M - 1.0)) / M);
  CHECK(std::abs(mean - 2.0) <= 3.0 * se);
}

TEST_CASE("pencil residual: det(zA - B) vanishes at the returned points") {
  RngStream s(19);
  for (int rep = 0; rep < 20; ++rep) {
    RngStream sub = s.split(rep);
    const auto a = random_gaussian_matrix(3, sub);
    const auto b = random_gaussian_matrix(3, sub);
    const auto ps = pencil_eigenvalues(a, b);
    REQUIRE(ps.has_value());
    // scale of det on |z| = 1
    double scale = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double th = 2 * 3.14159265358979323846 * k / 16;
      scale = std::max(scale, std::abs(det_pencil_at(a, b, cx(std::cos(th), std::sin(th)))));
    }
    for (const auto& p : ps->points) {
      if (p.at_infinity || std::abs(p.z) > 1.0) continue;
      CHECK(std::abs(det_pencil_at(a, b, p.z)) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("matrix polynomial: deterministic double root") {
  // det(I - 2zI) = (1 - 2z)^2 for n = 2
  std::vector<CMatrix> coeffs{CMatrix::Identity(2, 2), -2.0 * CMatrix::Identity(2, 2)};
  const auto ps = matrix_polynomial_zeros(coeffs, 0.9);
  REQUIRE(ps.has_value());
  CHECK(ps->total_count() == 2);
  CHECK(ps->size() == 1);  // clustered double root
  CHECK(std::abs(ps->points[0].z - cx(0.5, 0)) < 1e-7);
}

TEST_CASE("matrix series: n = 1 reduces to the unit disk family") {
  // mean count in |z| < 0.5 is r^2/(1-r^2) = 1/3
  MatrixGafSpec spec(1, GafSpec(Domain::Disk, 1));
  RngStream s(23);
  const int M = 3000;
  const double eps = scaled_eps(spec.base, 0.7, 1e-8);
  double sum = 0, sumsq = 0;
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    const auto ps = matrix_series_zeros(spec, sub, 0.5, eps);
    const double c = static_cast<double>(ps.total_count());
    sum += c;
    sumsq += c * c;
  }
  const double mean = sum / M;
  const double se = std::sqrt(((sumsq - M * mean * mean) / (M - 1.0)) / M);
  CHECK(std::abs(mean - 1.0 / 3.0) <= 3.0 * se);
}

TEST_CASE("matrix series: truncation order and size cap") {
  MatrixGafSpec spec(2, GafSpec(Domain::Disk, 1));
  const double cert = 0.5 + 0.4 * 0.5;
  const int N = matrix_series_truncation(spec, cert, scaled_eps(spec.base, cert, 1e-8));
  CHECK(N > 20);
  CHECK(2 * N <= 256);
  MatrixGafSpec big(64, GafSpec(Domain::Disk, 1));
  RngStream s(29);
  CHECK_THROWS(matrix_series_zeros(big, s, 0.5, 1e-8));
}
