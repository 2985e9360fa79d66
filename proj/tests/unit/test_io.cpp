#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zraf/io.hpp"
#include "zraf/pencil.hpp"
#include "zraf/rng.hpp"

using namespace zraf;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("csv row for the origin point") {
  PointSet ps;
  ps.domain = Domain::Plane;
  ps.push_back(Point{cx(0, 0), false});
  const std::string path = "/tmp/zraf_test_points.csv";
  emit_points({ps}, path, PointFormat::Csv);
  CHECK(slurp(path) == "sample_id,re,im,multiplicity,at_infinity\n0,0,0,1,false\n");
  std::remove(path.c_str());
}

TEST_CASE("17-significant-digit floats") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("jsonl round trip") {
  RngStream s(3);
  std::vector<PointSet> samples;
  for (int i = 0; i < 5; ++i) {
    RngStream sub = s.split(i);
    samples.push_back(det_pencil_zeros(MatrixGafSpec(3, GafSpec(Domain::Sphere, 1)), sub));
  }
  const std::string path = "/tmp/zraf_test_points.jsonl";
  emit_points(samples, path, PointFormat::Jsonl);
  const auto back = read_points_jsonl(path);
  REQUIRE(back.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(back[i].domain == samples[i].domain);
    REQUIRE(back[i].points.size() == samples[i].points.size());
    for (std::size_t p = 0; p < samples[i].points.size(); ++p) {
      CHECK(back[i].points[p].z == samples[i].points[p].z);
      CHECK(back[i].points[p].at_infinity == samples[i].points[p].at_infinity);
      CHECK(back[i].mult[p] == samples[i].mult[p]);
    }
    CHECK(back[i].meta.generator == samples[i].meta.generator);
    CHECK(back[i].meta.path == samples[i].meta.path);
  }
  std::remove(path.c_str());
}

TEST_CASE("row count scales with samples times points") {
  RngStream s(5);
  std::vector<PointSet> samples;
  const int M = 1000, n = 5;
  for (int i = 0; i < M; ++i) {
    RngStream sub = s.split(i);
    samples.push_back(det_pencil_zeros(MatrixGafSpec(n, GafSpec(Domain::Sphere, 1)), sub));
  }
  const std::string path = "/tmp/zraf_test_count.csv";
  emit_points(samples, path, PointFormat::Csv);
  const std::string text = slurp(path);
  const auto rows = std::count(text.begin(), text.end(), '\n');
  CHECK(rows == M * n + 1);
  std::remove(path.c_str());
}
