// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace zraf {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

nlohmann::json meta_to_json(const SampleMeta& m) {
  nlohmann::json j;
  j["generator"] = m.generator;
  j["seed"] = m.seed;
  j["path"] = m.path;
  j["retries"] = m.retries;
  j["certified_radius"] = m.certified_radius;
  return j;
}

SampleMeta meta_from_json(const nlohmann::json& j) {
  SampleMeta m;
  m.generator = j.value("generator", std::string());
  m.seed = j.value("seed", std::uint64_t(0));
  m.path = j.value("path", std::vector<std::uint64_t>());
  m.retries = j.value("retries", std::uint32_t(0));
  m.certified_radius = j.value("certified_radius", 0.0);
  return m;
}

}  // namespace

void emit_points(const std::vector<PointSet>& samples, const std::string& path,
                 PointFormat format) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) throw std::runtime_error("emit_points: cannot open " + path);
  if (format == PointFormat::Csv) {
    out << "sample_id,re,im,multiplicity,at_infinity\n";
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const auto& ps = samples[s];
      for (std::size_t i = 0; i < ps.points.size(); ++i) {
        out << s << ',' << format_double(ps.points[i].z.real()) << ','
            << format_double(ps.points[i].z.imag()) << ',' << ps.mult[i] << ','
            << (ps.points[i].at_infinity ? "true" : "false") << '\n';
      }
    }
  } else {
    for (const auto& ps : samples) {
      nlohmann::json j;
      j["domain"] = domain_name(ps.domain);
      auto& pts = j["points"] = nlohmann::json::array();
      auto& mult = j["mult"] = nlohmann::json::array();
      auto& inf = j["infinity"] = nlohmann::json::array();
      for (std::size_t i = 0; i < ps.points.size(); ++i) {
        pts.push_back({ps.points[i].z.real(), ps.points[i].z.imag()});
        mult.push_back(ps.mult[i]);
        inf.push_back(ps.points[i].at_infinity);
      }
      j["meta"] = meta_to_json(ps.meta);
      out << j.dump() << '\n';
    }
  }
  if (!out) throw std::runtime_error("emit_points: write failed for " + path);
}

std::vector<PointSet> read_points_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_points_jsonl: cannot open " + path);
  std::vector<PointSet> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    PointSet ps;
    ps.domain = domain_from_name(j.at("domain").get<std::string>());
    const auto& pts = j.at("points");
    const auto& mult = j.at("mult");
    const auto& inf = j.at("infinity");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Point p;
      p.z = cx(pts[i][0].get<double>(), pts[i][1].get<double>());
      p.at_infinity = inf[i].get<bool>();
      ps.push_back(p, mult[i].get<std::uint32_t>());
    }
    if (j.contains("meta")) ps.meta = meta_from_json(j["meta"]);
    out.push_back(std::move(ps));
  }
  return out;
}

}  // namespace zraf
