#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "zraf/gaf.hpp"
#include "zraf/hypothesis.hpp"
#include "zraf/roots.hpp"

using namespace zraf;

namespace {
constexpr double kPi = 3.14159265358979323846;

// independent oracle: sum binomial-coefficient weights x^n until the tail
// drops below 1e-8
double disk_covariance_by_series(double L, double x) {
  double sum = 0.0, term = 1.0;
  for (int n = 0; n < 100000; ++n) {
    sum += term;
    term *= (L + n) / (n + 1.0) * x;
    if (term < 1e-8 && n > 4) break;
  }
  return sum;
}
}  // namespace

TEST_CASE("covariance closed forms") {
  for (auto spec : {GafSpec(Domain::Plane, 1.5), GafSpec(Domain::Sphere, 3),
                    GafSpec(Domain::Disk, 2)}) {
    CHECK(covariance(spec, cx(0, 0), cx(0, 0)) == cx(1, 0));
  }
  CHECK(std::abs(covariance(GafSpec(Domain::Sphere, 3), cx(1, 0), cx(1, 0)) - cx(8, 0)) <
        1e-12);
  const double oracle = disk_covariance_by_series(2.0, 0.25);
  CHECK(std::abs(covariance(GafSpec(Domain::Disk, 2), cx(0.5, 0), cx(0.5, 0)).real() -
                 oracle) < 1e-5);
  CHECK(oracle == doctest::Approx(1.77778).epsilon(1e-5));
  CHECK_THROWS(covariance(GafSpec(Domain::Disk, 1), cx(1.1, 0), cx(0, 0)));
}

TEST_CASE("sphere samples are exact polynomials of degree L") {
  RngStream s(5);
  const auto f = sample_gaf(GafSpec(Domain::Sphere, 5), s, 1.0, 1e-9);
  CHECK(f.coeffs.size() == 6);
  CHECK(f.tail_bound == 0.0);
  CHECK(std::isinf(f.radius));
}

TEST_CASE("coefficient variances match the family weights") {
  RngStream s(11);
  const int M = 10000;
  // Plane, L = 1: E|c_n|^2 = 1/n!
  std::vector<double> acc(9, 0.0);
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    const auto f = sample_gaf(GafSpec(Domain::Plane, 1), sub, 2.0, 1e-9);
    for (int n = 0; n <= 8; ++n) acc[n] += std::norm(f.coeffs[n]);
  }
  double fact = 1.0;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) fact *= n;
    CHECK(acc[n] / M == doctest::Approx(1.0 / fact).epsilon(0.05));
  }
  // Disk, L = 1: E|c_n|^2 = 1 for all n
  RngStream s2(12);
  const auto g = sample_gaf(GafSpec(Domain::Disk, 1), s2, 0.9, 1e-9);
  for (int n = 0; n < g.degree(); ++n) {
    CHECK(coefficient_weight(GafSpec(Domain::Disk, 1), n) == doctest::Approx(1.0));
  }
}

TEST_CASE("truncation certificate") {
  RngStream s(3);
  const double eps = scaled_eps(GafSpec(Domain::Plane, 1), 2.0, 1e-9);
  const auto f = sample_gaf(GafSpec(Domain::Plane, 1), s, 2.0, eps);
  CHECK(f.tail_bound <= 0.01 * eps);
  CHECK(f.radius == 2.0);
}

TEST_CASE("edelman-kostlan intensity: closed forms with FD cross-check") {
  CHECK(edelman_kostlan_intensity(GafSpec(Domain::Plane, 1), cx(0.3, -1.2)) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-10));
  CHECK(edelman_kostlan_intensity(GafSpec(Domain::Disk, 4), cx(0, 0)) ==
        doctest::Approx(4.0 / kPi).epsilon(1e-10));
  CHECK(edelman_kostlan_intensity(GafSpec(Domain::Sphere, 2), cx(0.5, 0.5)) ==
        doctest::Approx(2.0 / (kPi * 2.25)).epsilon(1e-10));

  // whole-sphere integral of the intensity equals L (number of zeros):
  // substitute u = r^2, integral = L * int_0^inf du/(1+u)^2 = L
  const GafSpec sphere(Domain::Sphere, 7);
  double integral = 0.0;
  const int K = 200000;
  for (int i = 0; i < K; ++i) {
    const double v = (i + 0.5) / K;          // v = u/(1+u)
    const double u = v / (1.0 - v);
    const double jac = 1.0 / ((1.0 - v) * (1.0 - v));
    integral += intensity_closed_form(sphere, cx(std::sqrt(u), 0)) * kPi * jac / K;
  }
  CHECK(integral == doctest::Approx(7.0).epsilon(1e-6));
}

TEST_CASE("sphere family has exactly L zeros with multiplicity") {
  RngStream s(21);
  for (int rep = 0; rep < 20; ++rep) {
    RngStream sub = s.split(rep);
    const auto f = sample_gaf(GafSpec(Domain::Sphere, 5), sub, 1.0, 0.0);
    const auto res = zeros_in_disk(f, std::numeric_limits<double>::infinity(), Domain::Sphere);
    CHECK(res.zeros.total_count() == 5);
  }
}

TEST_CASE("kernel reproduction: empirical covariance at fixed pairs") {
  const GafSpec spec(Domain::Plane, 1);
  const int M = 100000;
  const std::vector<std::pair<cx, cx>> pairs = {
      {cx(0, 0), cx(0, 0)},     {cx(0.5, 0), cx(0.5, 0)},  {cx(1, 0), cx(0, 1)},
      {cx(0.7, 0.2), cx(-0.3, 0.4)}, {cx(1.2, 0), cx(1.2, 0)}, {cx(0, 1.5), cx(0, -0.5)},
      {cx(-1, -1), cx(1, 1)},   {cx(0.1, 0), cx(1.9, 0)},  {cx(0.9, 0.9), cx(0.8, -0.2)},
      {cx(2, 0), cx(0, 0)}};
  RngStream s(31);
  std::vector<cx> acc(pairs.size(), cx(0, 0));
  std::vector<double> acc2(pairs.size(), 0.0);
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    const auto f = sample_gaf(spec, sub, 2.2, scaled_eps(spec, 2.2, 1e-9));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const cx prod = evaluate(f, pairs[p].first) * std::conj(evaluate(f, pairs[p].second));
      acc[p] += prod;
      acc2[p] += std::norm(prod);
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const cx mean = acc[p] / static_cast<double>(M);
    const double se =
        std::sqrt(std::max(0.0, acc2[p] / M - std::norm(mean)) / M);
    const cx expected = covariance(spec, pairs[p].first, pairs[p].second);
    CHECK(std::abs(mean - expected) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("zero-count mean matches the intensity integral") {
  const GafSpec spec(Domain::Plane, 2);
  const double r = 1.25;
  RngStream s(41);
  const int M = 4000;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    const auto ps = sample_gaf_zeros(spec, sub, r);
    const double c = static_cast<double>(ps.total_count());
    sum += c;
    sumsq += c * c;
  }
  const double mean = sum / M;
  const double se = std::sqrt(std::max(0.0, (sumsq - M * mean * mean) / (M - 1.0)) / M);
  CHECK(std::abs(mean - expected_zero_count(spec, r)) <= 3.0 * se);
}

TEST_CASE("zero angles are uniform") {
  const GafSpec spec(Domain::Plane, 1);
  RngStream s(51);
  std::vector<std::uint64_t> bins(24, 0);
  for (int i = 0; i < 10000; ++i) {
    RngStream sub = s.split(i);
    const auto ps = sample_gaf_zeros(spec, sub, 1.5);
    for (const auto& p : ps.points) {
      double th = std::arg(p.z);
      if (th < 0) th += 2 * kPi;
      auto b = static_cast<std::size_t>(th / (2 * kPi) * 24);
      if (b >= 24) b = 23;
      ++bins[b];
    }
  }
  CHECK(chi2_uniform(bins).p_value > 0.01);
}

TEST_CASE("winding certification holds on accepted samples") {
  const GafSpec spec(Domain::Disk, 1);
  RngStream s(61);
  for (int i = 0; i < 50; ++i) {
    RngStream sub = s.split(i);
    const double eps = scaled_eps(spec, 0.7, 1e-9);
    const auto f = sample_gaf(spec, sub, 0.7, eps);
    const auto res = zeros_in_disk(f, 0.5, Domain::Disk);
    if (res.flagged) continue;
    const auto w = winding_count(f.coeffs, 0.5);
    REQUIRE(w.has_value());
    CHECK(static_cast<std::uint64_t>(*w) == res.zeros.total_count());
  }
}
