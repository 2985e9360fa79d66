#include <doctest.h>

#include <cmath>

#include "zraf/deviations.hpp"
#include "zraf/hypothesis.hpp"

using namespace zraf;

TEST_CASE("overcrowding curve against the hyperbolic radial oracle") {
  CountGenerator gen;
  gen.kind = CountGenerator::Kind::HyperbolicRadii;
  RngStream s(3);
  const auto curve = overcrowding_curve(gen, 0.5, 5, s, 100000, 2);
  REQUIRE(curve.m.size() == 6);
  CHECK(curve.estimate[0] == 1.0);
  // exact values covered by the Wilson(3) intervals
  for (std::size_t i = 0; i < curve.m.size(); ++i) {
    CHECK(curve.exact[i]);
    if (curve.estimate[i] > 30.0 / static_cast<double>(curve.samples)) {
      CHECK(curve.exact_value[i] >= curve.lo[i]);
      CHECK(curve.exact_value[i] <= curve.hi[i]);
    }
  }
  // exact tail at m = 1 is 1 - prod(1 - 0.25^n)
  CHECK(curve.exact_value[1] == doctest::Approx(0.311464).epsilon(1e-4));
  // TV between MC and exact distribution
  const auto exact = count_distribution_exact(gen.exact_law(0.5), 0.5);
  CHECK(total_variation(curve.mc_dist, exact) < 0.02);
}

TEST_CASE("ginibre radii generator matches the matrix sampler's law") {
  RngStream s(5);
  CountGenerator radii;
  radii.kind = CountGenerator::Kind::GinibreRadii;
  radii.n = 40;
  const auto curve = overcrowding_curve(radii, 1.0, 4, s, 100000, 2);
  for (std::size_t i = 0; i < curve.m.size(); ++i) {
    if (curve.estimate[i] > 30.0 / static_cast<double>(curve.samples)) {
      CHECK(curve.exact_value[i] >= curve.lo[i]);
      CHECK(curve.exact_value[i] <= curve.hi[i]);
    }
  }
}

TEST_CASE("planar overcrowding curve is monotone and convex in the tail") {
  CountGenerator gen;
  gen.kind = CountGenerator::Kind::PlanarGaf;
  gen.L = 1.0;
  RngStream s(7);
  const auto curve = overcrowding_curve(gen, 1.0, 4, s, 200000, 2);
  CHECK(curve.estimate[0] == 1.0);
  for (std::size_t i = 1; i < curve.m.size(); ++i) {
    CHECK(curve.estimate[i] <= curve.estimate[i - 1]);
  }
  // -log P increasing spacing over m = 1..4 (qualitative convexity)
  const double l1 = -std::log(curve.estimate[1]);
  const double l2 = -std::log(curve.estimate[2]);
  const double l3 = -std::log(curve.estimate[3]);
  CHECK(l3 - l2 > l2 - l1);
}

TEST_CASE("slope experiment is monotone and cross-checks the curve") {
  RngStream s(9);
  const auto rows = deviation_slope_experiment({1.0, 1.5}, 2.0, 1.0, s, 100000, 2);
  REQUIRE(rows.size() == 2);
  // threshold at r = 1: ceil(1 + 1) = 2
  CHECK(rows[0].threshold == 2);
  CHECK(rows[1].threshold == 5);
  CHECK(rows[0].probability >= rows[1].probability);

  // alpha = 3, gamma = 1, r = 1: same event as the curve at m = 2
  RngStream s2(7);
  CountGenerator gen;
  gen.kind = CountGenerator::Kind::PlanarGaf;
  const auto curve = overcrowding_curve(gen, 1.0, 2, s2, 100000, 2);
  RngStream s3(9);
  const auto row = deviation_slope_experiment({1.0}, 3.0, 1.0, s3, 100000, 2)[0];
  CHECK(row.threshold == 2);
  // intervals of the two independent estimators overlap
  CHECK(row.lo <= curve.hi[2]);
  CHECK(curve.lo[2] <= row.hi);
  CHECK(deviation_slope_experiment({1.0}, 3.0, 5.0, s3, 1000, 2)[0].resolved == false);
}

TEST_CASE("desk-scale guard") {
  RngStream s(11);
  CHECK_THROWS(deviation_slope_experiment({4.0}, 2.0, 1.0, s, 100, 1));
}
