#include <doctest.h>

#include <cmath>

#include "zraf/polygaf.hpp"
#include "zraf/roots.hpp"
#include "zraf/rng.hpp"

using namespace zraf;

namespace {
TruncatedSeries poly(std::vector<cx> c, double r = 10.0) {
  TruncatedSeries s;
  s.coeffs = std::move(c);
  s.radius = r;
  return s;
}
}  // namespace

TEST_CASE("eval_polygaf basics") {
  const auto id = HomPoly::zeta();
  CHECK(eval_polygaf(id, {poly({cx(1, 0)})}, cx(5, 5)) == cx(1, 0));

  const auto q2 = HomPoly::product2();
  // f1(z) = z, f2(z) = z + 1 at z = 1 -> 2
  CHECK(eval_polygaf(q2, {poly({cx(0, 0), cx(1, 0)}), poly({cx(1, 0), cx(1, 0)})},
                     cx(1, 0)) == cx(2, 0));
  CHECK_THROWS(eval_polygaf(q2, {poly({cx(1, 0)})}, cx(0, 0)));
}

TEST_CASE("determinant equals ad - bc on random evaluations") {
  const auto det2 = HomPoly::det(2);
  CHECK(det2.arity() == 4);
  CHECK(det2.degree() == 2);
  RngStream s(23);
  std::vector<TruncatedSeries> entries;
  for (int i = 0; i < 4; ++i) {
    entries.push_back(poly({s.next_complex_gaussian(), s.next_complex_gaussian(),
                            s.next_complex_gaussian()}));
  }
  for (int rep = 0; rep < 100; ++rep) {
    const cx z = 2.0 * s.next_complex_gaussian();
    const cx a = evaluate(entries[0], z), b = evaluate(entries[1], z);
    const cx c = evaluate(entries[2], z), d = evaluate(entries[3], z);
    const cx direct = a * d - b * c;
    CHECK(std::abs(eval_polygaf(det2, entries, z) - direct) <=
          1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("polygaf_series: powers and cross-evaluation") {
  const auto sq = HomPoly::power(2);
  const auto out = polygaf_series(sq, {poly({cx(0, 0), cx(1, 0)})});
  CHECK(out.coeffs == std::vector<cx>{cx(0, 0), cx(0, 0), cx(1, 0)});

  const auto det2 = HomPoly::det(2);
  RngStream s(29);
  std::vector<TruncatedSeries> entries;
  for (int i = 0; i < 4; ++i) {
    entries.push_back(poly({s.next_complex_gaussian(), s.next_complex_gaussian()}, 3.0));
  }
  const auto series = polygaf_series(det2, entries);
  for (int rep = 0; rep < 50; ++rep) {
    const cx z = s.next_complex_gaussian();
    const cx via_series = evaluate(series, z);
    const cx direct = eval_polygaf(det2, entries, z);
    CHECK(std::abs(via_series - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("zeros of a product polygaf are the union of component zeros") {
  const auto q = HomPoly::product2();
  // f1 = z - 0.3, f2 = z + 0.5i
  auto f1 = poly({cx(-0.3, 0), cx(1, 0)});
  auto f2 = poly({cx(0, 0.5), cx(1, 0)});
  const auto series = polygaf_series(q, {f1, f2});
  auto res = zeros_in_disk(series, 1.0);
  REQUIRE(!res.flagged);
  REQUIRE(res.zeros.total_count() == 2);
  bool saw1 = false, saw2 = false;
  for (const auto& p : res.zeros.points) {
    if (std::abs(p.z - cx(0.3, 0)) < 1e-9) saw1 = true;
    if (std::abs(p.z - cx(0, -0.5)) < 1e-9) saw2 = true;
  }
  CHECK(saw1);
  CHECK(saw2);
}

TEST_CASE("det3 series path matches pointwise evaluation") {
  const auto det3 = HomPoly::det(3);
  CHECK(det3.arity() == 9);
  CHECK(det3.terms().size() == 6);
  RngStream s(31);
  std::vector<TruncatedSeries> entries;
  for (int i = 0; i < 9; ++i) {
    entries.push_back(poly({s.next_complex_gaussian(), s.next_complex_gaussian()}, 2.0));
  }
  const auto series = polygaf_series(det3, entries);
  CHECK(series.degree() == 3);
  for (int rep = 0; rep < 20; ++rep) {
    const cx z = 0.7 * s.next_complex_gaussian();
    CHECK(std::abs(evaluate(series, z) - eval_polygaf(det3, entries, z)) < 1e-10);
  }
}

TEST_CASE("hompoly validation") {
  CHECK_THROWS(HomPoly(2, {HomPoly::Term{{1, 0}, cx(1, 0)},
                           HomPoly::Term{{1, 1}, cx(1, 0)}}));  // unequal degrees
  CHECK_THROWS(HomPoly(1, {HomPoly::Term{{1}, cx(0, 0)}}));     // all zero
}
