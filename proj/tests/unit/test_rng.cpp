#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "zraf/hypothesis.hpp"
#include "zraf/rng.hpp"

using zraf::RngStream;

TEST_CASE("split streams are deterministic") {
  RngStream a(1);
  RngStream c1 = a.split(0);
  RngStream c2 = RngStream(1).split(0);
  for (int i = 0; i < 64; ++i) CHECK(c1.next_u64() == c2.next_u64());
}

TEST_CASE("sibling streams differ") {
  RngStream a(1);
  RngStream c0 = a.split(0);
  RngStream c1 = a.split(1);
  int differing = 0;
  for (int i = 0; i < 128; ++i) {
    if (c0.next_u64() != c1.next_u64()) ++differing;
  }
  CHECK(differing >= 1);
  // splitting does not advance the parent
  RngStream b(1);
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("paired child outputs are uncorrelated") {
  RngStream root(17);
  RngStream x = root.split(0);
  RngStream y = root.split(1);
  const int n = 100000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double u = x.next_double();
    const double v = y.next_double();
    sx += u;
    sy += v;
    sxx += u * u;
    syy += v * v;
    sxy += u * v;
  }
  const double mx = sx / n, my = sy / n;
  const double rho = (sxy / n - mx * my) /
                     std::sqrt((sxx / n - mx * mx) * (syy / n - my * my));
  CHECK(std::abs(rho) < 0.01);
}

TEST_CASE("standard complex gaussian moments and argument law") {
  RngStream s(42);
  const int n = 1000000;
  double re = 0, im = 0, mod2 = 0;
  std::vector<std::uint64_t> arg_bins(36, 0);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> a = s.next_complex_gaussian();
    re += a.real();
    im += a.imag();
    mod2 += std::norm(a);
    double th = std::arg(a);
    if (th < 0) th += 2 * 3.14159265358979323846;
    auto b = static_cast<std::size_t>(th / (2 * 3.14159265358979323846) * 36);
    if (b >= 36) b = 35;
    ++arg_bins[b];
  }
  CHECK(std::abs(re / n) < 4e-3);
  CHECK(std::abs(im / n) < 4e-3);
  CHECK(std::abs(mod2 / n - 1.0) < 5e-3);
  const auto chi2 = zraf::chi2_uniform(arg_bins);
  CHECK(chi2.p_value > 0.01);
}

TEST_CASE("seed and path fully determine the stream") {
  RngStream a = RngStream(7).split(3).split(1);
  RngStream b = RngStream(7).split(3).split(1);
  CHECK(a.path() == std::vector<std::uint64_t>{3, 1});
  for (int i = 0; i < 16; ++i) CHECK(a.next_complex_gaussian() == b.next_complex_gaussian());
}
