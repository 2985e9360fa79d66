// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#include "zraf/experiment.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "zraf/clt.hpp"
#include "zraf/deviations.hpp"
#include "zraf/dpp.hpp"
#include "zraf/gaf.hpp"
#include "zraf/hypothesis.hpp"
#include "zraf/io.hpp"
#include "zraf/mobius.hpp"
#include "zraf/parallel.hpp"
#include "zraf/pencil.hpp"
#include "zraf/projection_dpp.hpp"
#include "zraf/stats.hpp"
#include "zraf/wick.hpp"

namespace zraf {
namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) fail(path + "." + key, "missing required field");
  return j.at(key);
}

double need_number(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number()) fail(path + "." + key, "must be a number");
  return v.get<double>();
}

std::string need_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "must be a string");
  return v.get<std::string>();
}

cx json_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "must be [re, im]");
  return cx(v[0].get<double>(), v[1].get<double>());
}

// ---------------------------------------------------------------------
// Generators

struct GeneratorSpec {
  std::string type;
  Domain domain = Domain::Plane;
  double L = 1.0;
  int n = 1;
  double alpha = 1.0;
  int rank = 0;
  double window = 0.0;     // sampling window radius for window-based types
  double intensity = 1.0;  // poisson control
};

GeneratorSpec parse_generator(const json& g, const std::string& path) {
  GeneratorSpec spec;
  spec.type = need_string(g, "type", path);
  if (spec.type == "gaf") {
    spec.domain = domain_from_name(need_string(g, "domain", path));
    spec.L = need_number(g, "L", path);
    if (!(spec.L > 0)) fail(path + ".L", "must be > 0");
    spec.window = g.value("r", 0.0);
  } else if (spec.type == "det-pencil") {
    spec.n = static_cast<int>(need_number(g, "n", path));
    if (spec.n < 1) fail(path + ".n", "must be >= 1");
    spec.domain = Domain::Sphere;
  } else if (spec.type == "matrix-series") {
    spec.n = static_cast<int>(need_number(g, "n", path));
    if (spec.n < 1) fail(path + ".n", "must be >= 1");
    spec.L = g.value("L", 1.0);
    spec.window = need_number(g, "r", path);
    if (!(spec.window > 0 && spec.window < 1)) fail(path + ".r", "must be in (0, 1)");
    spec.domain = Domain::Disk;
  } else if (spec.type == "ginibre") {
    spec.n = static_cast<int>(need_number(g, "n", path));
    if (spec.n < 1) fail(path + ".n", "must be >= 1");
    spec.domain = Domain::Plane;
  } else if (spec.type == "hyperbolic-radii") {
    spec.window = need_number(g, "r", path);
    if (!(spec.window > 0 && spec.window < 1)) fail(path + ".r", "must be in (0, 1)");
    spec.domain = Domain::Disk;
  } else if (spec.type == "projection-dpp") {
    spec.domain = domain_from_name(need_string(g, "domain", path));
    spec.alpha = need_number(g, "alpha", path);
    spec.rank = static_cast<int>(g.value("rank", 0.0));
    spec.window = g.value("window", 3.0);
  } else if (spec.type == "poisson") {
    spec.intensity = need_number(g, "intensity", path);
    spec.window = need_number(g, "r", path);
    spec.domain = Domain::Plane;
  } else {
    fail(path + ".type", "unknown generator type '" + spec.type + "'");
  }
  return spec;
}

ProjectionBasis build_basis(const GeneratorSpec& g) {
  switch (g.domain) {
    case Domain::Sphere:
      return ProjectionBasis::det_sphere(static_cast<int>(std::lround(g.alpha)));
    case Domain::Plane: {
      int rank = g.rank;
      if (rank <= 0) {
        // enough basis mass inside the window: trace error < 1e-6
        rank = static_cast<int>(std::ceil(g.alpha * g.window * g.window +
                                          8.0 * std::sqrt(g.alpha) * g.window + 16.0));
      }
      return ProjectionBasis::det_plane(g.alpha, rank, g.window);
    }
    case Domain::Disk: {
      int rank = g.rank;
      if (rank <= 0) {
        rank = static_cast<int>(std::ceil(std::log(1e-7) / std::log(g.window * g.window)) +
                                g.alpha + 8);
      }
      return ProjectionBasis::det_disk(g.alpha, rank, g.window);
    }
  }
  throw ConfigError("generator: unsupported projection family");
}

PointSet sample_poisson_disk(double intensity, double r, RngStream& stream) {
  // Poisson count via exponential gaps, then uniform positions.
  const double mean = intensity * kPi * r * r;
  int count = 0;
  double acc = -std::log1p(-stream.next_double());
  while (acc < mean) {
    ++count;
    acc += -std::log1p(-stream.next_double());
  }
  PointSet ps;
  ps.domain = Domain::Plane;
  ps.meta.generator = "poisson";
  ps.meta.certified_radius = r;
  for (int i = 0; i < count; ++i) {
    const double rho = r * std::sqrt(stream.next_double());
    const double th = 2.0 * kPi * stream.next_double();
    ps.push_back(Point{rho * cx(std::cos(th), std::sin(th)), false});
  }
  return ps;
}

struct GeneratorRuntime {
  GeneratorSpec spec;
  std::optional<ProjectionBasis> basis;  // built once for projection-dpp
  double window = 0.0;

  PointSet sample(RngStream& sub) const {
    if (spec.type == "gaf") {
      const double r = window > 0 ? window
                                  : (spec.domain == Domain::Sphere
                                         ? std::numeric_limits<double>::infinity()
                                         : 1.0);
      return sample_gaf_zeros(GafSpec(spec.domain, spec.L), sub, r);
    }
    if (spec.type == "det-pencil") {
      return det_pencil_zeros(MatrixGafSpec(spec.n, GafSpec(Domain::Sphere, 1.0)), sub);
    }
    if (spec.type == "ginibre") return sample_ginibre_n(spec.n, sub);
    if (spec.type == "matrix-series") {
      MatrixGafSpec ms(spec.n, GafSpec(Domain::Disk, spec.L));
      const double cert = spec.window + 0.4 * (1.0 - spec.window);
      return matrix_series_zeros(ms, sub, spec.window,
                                 scaled_eps(ms.base, cert, 1e-8));
    }
    if (spec.type == "projection-dpp") return sample_projection_dpp(*basis, sub);
    if (spec.type == "poisson") return sample_poisson_disk(spec.intensity, spec.window, sub);
    if (spec.type == "hyperbolic-radii") {
      PointSet ps;
      ps.domain = Domain::Disk;
      ps.meta.generator = "hyperbolic-radii";
      ps.meta.certified_radius = spec.window;
      RngStream s = sub;
      for (double rho : sample_radii_hyperbolic1(s, spec.window)) {
        ps.push_back(Point{cx(rho, 0.0), false});
      }
      return ps;
    }
    throw ConfigError("generator.type: cannot sample '" + spec.type + "'");
  }
};

// Closed-form Lebesgue intensity for the verdict reference.
double reference_intensity(const GeneratorSpec& g, double modulus) {
  const double m2 = modulus * modulus;
  if (g.type == "gaf") return intensity_closed_form(GafSpec(g.domain, g.L), cx(modulus, 0));
  if (g.type == "det-pencil") return g.n / (kPi * (1.0 + m2) * (1.0 + m2));
  if (g.type == "matrix-series") return g.n / (kPi * (1.0 - m2) * (1.0 - m2));
  if (g.type == "ginibre") return boost::math::gamma_q(g.n, m2) / kPi;
  if (g.type == "poisson") return g.intensity;
  throw ConfigError("generator.type: no closed-form intensity for '" + g.type + "'");
}

// Normalized pair correlation rho2 / (rho1 rho1) for the prediction.
std::function<double(cx, cx)> reference_pair_ratio(const GeneratorSpec& g) {
  if (g.type == "ginibre") {
    const int n = g.n;
    return [n](cx z, cx w) {
      // finite-n kernel sum_{k<n} (z conj(w))^k / k! with Gaussian weights
      const cx zw = z * std::conj(w);
      cx kzw(0, 0);
      double kzz = 0, kww = 0;
      cx t(1, 0);
      double tz = 1, tw = 1;
      for (int k = 0; k < n; ++k) {
        kzw += t;
        kzz += tz;
        kww += tw;
        t *= zw / static_cast<double>(k + 1);
        tz *= std::norm(z) / (k + 1);
        tw *= std::norm(w) / (k + 1);
      }
      // Gaussian reference weights cancel in the normalized ratio.
      return 1.0 - std::norm(kzw) / (kzz * kww);
    };
  }
  if (g.type == "matrix-series") {
    const double e = g.n + 1.0;
    return [e](cx z, cx w) {
      const double d2 = std::norm(z - w) / std::norm(1.0 - z * std::conj(w));
      return 1.0 - std::pow(1.0 - d2, e);
    };
  }
  if (g.type == "poisson") {
    return [](cx, cx) { return 1.0; };
  }
  throw ConfigError("generator.type: no pair-correlation reference for '" + g.type + "'");
}

std::function<double(cx, cx)> reference_pair_weight(const GeneratorSpec& g) {
  GeneratorSpec spec = g;
  return [spec](cx z, cx w) {
    return 1.0 / (reference_intensity(spec, std::abs(z)) *
                  reference_intensity(spec, std::abs(w)));
  };
}

// ---------------------------------------------------------------------

HomPoly parse_hompoly(const std::string& name, const std::string& path) {
  if (name == "zeta") return HomPoly::zeta();
  if (name == "prod2") return HomPoly::product2();
  if (name == "det2") return HomPoly::det(2);
  if (name == "det3") return HomPoly::det(3);
  fail(path, "unknown polynomial '" + name + "' (zeta|prod2|det2|det3)");
}

MobiusMap parse_map(const json& m, Domain domain, const std::string& path) {
  if (m.is_string() && m.get<std::string>() == "identity") {
    return MobiusMap::identity(domain);
  }
  if (!m.is_object()) fail(path, "must be \"identity\" or {alpha, beta}");
  const cx a = json_complex(need(m, "alpha", path), path + ".alpha");
  const cx b = json_complex(need(m, "beta", path), path + ".beta");
  try {
    return MobiusMap(domain, a, b);
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

struct RegionSpec {
  std::string type;  // "disk" | "cap"
  double r = 1.0;
  cx center{0, 0};
  double hmin = 0.0, hmax = 1.0;

  RegionPred pred() const {
    if (type == "disk") return closed_disk(r, center);
    return spherical_cap(hmin, hmax);
  }
  std::string label() const {
    if (type == "disk") {
      return "disk(r=" + format_double(r) + ")@" + format_double(center.real()) + "+" +
             format_double(center.imag()) + "i";
    }
    return "cap[" + format_double(hmin) + "," + format_double(hmax) + ")";
  }
};

RegionSpec parse_region(const json& r, const std::string& path) {
  RegionSpec spec;
  spec.type = need_string(r, "type", path);
  if (spec.type == "disk") {
    spec.r = need_number(r, "r", path);
    if (!(spec.r > 0)) fail(path + ".r", "must be > 0");
    if (r.contains("center")) spec.center = json_complex(r["center"], path + ".center");
  } else if (spec.type == "cap") {
    spec.hmin = need_number(r, "hmin", path);
    spec.hmax = need_number(r, "hmax", path);
    if (!(spec.hmin < spec.hmax)) fail(path, "needs hmin < hmax");
  } else {
    fail(path + ".type", "unknown region type (disk|cap)");
  }
  return spec;
}

MobiusMap mobius_inverse(const MobiusMap& m) {
  switch (m.domain) {
    case Domain::Plane:
      return MobiusMap(Domain::Plane, std::conj(m.alpha), -std::conj(m.alpha) * m.beta);
    case Domain::Sphere:
      return MobiusMap(Domain::Sphere, std::conj(m.alpha), -m.beta);
    case Domain::Disk:
      return MobiusMap(Domain::Disk, std::conj(m.alpha), -m.beta);
  }
  return m;
}

// ---------------------------------------------------------------------

json metrics_to_json(const Report& rep) {
  json arr = json::array();
  for (const auto& m : rep.metrics) {
    json j;
    j["name"] = m.name;
    j["estimate"] = m.estimate;
    j["se"] = m.se;
    j["tolerance"] = m.tolerance;
    j["verdict"] = m.verdict;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace

std::string Report::results_json() const {
  json j;
  j["config"] = json::parse(config_echo);
  j["metrics"] = metrics_to_json(*this);
  j["shard_plan"] = shard_plan;
  j["outputs"] = outputs;
  j["all_pass"] = all_pass;
  return j.dump(2) + "\n";
}

std::string Report::report_json() const {
  json j = json::parse(results_json());
  j["wall_clock_s"] = wall_clock_s;
  return j.dump(2) + "\n";
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  return parse_experiment_config(json_text, nullptr, nullptr, nullptr);
}

ExperimentConfig parse_experiment_config(const std::string& json_text,
                                         const std::uint64_t* seed_override,
                                         const int* shards_override,
                                         const std::string* out_override) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: must be a JSON object");

  ExperimentConfig cfg;
  cfg.kind = need_string(j, "kind", "config");
  static const char* kinds[] = {"sample",    "intensity",  "paircorr",
                                "wick",      "clt",        "overcrowd",
                                "invariance", "deviation-slope"};
  if (std::find_if(std::begin(kinds), std::end(kinds), [&](const char* k) {
        return cfg.kind == k;
      }) == std::end(kinds)) {
    fail("config.kind", "unknown experiment kind '" + cfg.kind + "'");
  }
  cfg.seed = j.value("seed", std::uint64_t(1));
  cfg.shards = static_cast<int>(j.value("shards", 1.0));
  cfg.out_dir = j.value("out", std::string());
  if (seed_override) cfg.seed = *seed_override;
  if (shards_override) cfg.shards = *shards_override;
  if (out_override) cfg.out_dir = *out_override;
  if (cfg.shards < 1) fail("config.shards", "must be >= 1");

  const json params = j.value("params", json::object());
  if (params.contains("M")) {
    const double m = params["M"].get<double>();
    if (!(m >= 1)) fail("config.params.M", "must be >= 1");
  }
  // Kind-specific required fields are validated at run time where the
  // value is consumed, with the same path-style errors.  Validate the
  // generator eagerly so malformed ones fail before any work.
  if (cfg.kind != "wick" && cfg.kind != "clt" && cfg.kind != "deviation-slope") {
    parse_generator(need(j, "generator", "config"), "config.generator");
  }

  json canon = j;
  canon["seed"] = cfg.seed;
  canon["shards"] = cfg.shards;
  if (!cfg.out_dir.empty()) canon["out"] = cfg.out_dir;
  cfg.canonical = canon.dump();
  cfg.raw = json_text;
  return cfg;
}

namespace {

std::vector<std::string> shard_plan_strings(std::size_t M, int shards) {
  std::vector<std::string> out;
  for (int s = 0; s < shards; ++s) {
    const std::size_t lo = M * s / shards, hi = M * (s + 1) / shards;
    out.push_back("shard " + std::to_string(s) + ": reps [" + std::to_string(lo) +
                  "," + std::to_string(hi) + ")");
  }
  return out;
}

void add_metric(Report& rep, const std::string& name, double est, double se,
                const std::string& tol, bool pass, bool gating = true) {
  Metric m;
  m.name = name;
  m.estimate = est;
  m.se = se;
  m.tolerance = tol;
  m.verdict = gating ? (pass ? "pass" : "fail") : "info";
  if (gating && !pass) rep.all_pass = false;
  rep.metrics.push_back(std::move(m));
}

std::vector<PointSet> draw_samples(const GeneratorRuntime& gen, RngStream& root,
                                   std::size_t M, int threads) {
  return parallel_map(
      M,
      [&](std::size_t rep) {
        RngStream sub = root.split(rep);
        return gen.sample(sub);
      },
      threads);
}

}  // namespace

Report run_experiment(const ExperimentConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const json j = json::parse(config.canonical);
  const json params = j.value("params", json::object());
  Report rep;
  rep.config_echo = config.canonical;

  RngStream root(config.seed);
  const int threads = config.shards;

  const auto get_M = [&](std::size_t dflt) -> std::size_t {
    return static_cast<std::size_t>(params.value("M", static_cast<double>(dflt)));
  };

  if (config.kind == "sample") {
    GeneratorRuntime gen{parse_generator(j.at("generator"), "config.generator"), {}, 0.0};
    gen.window = gen.spec.window;
    if (gen.spec.type == "projection-dpp") gen.basis = build_basis(gen.spec);
    const std::size_t M = get_M(100);
    rep.shard_plan = shard_plan_strings(M, config.shards);
    auto samples = draw_samples(gen, root, M, threads);
    double total = 0;
    for (const auto& s : samples) total += static_cast<double>(s.total_count());
    add_metric(rep, "mean_count", total / static_cast<double>(M), 0.0, "none", true, false);
    if (!config.out_dir.empty()) {
      std::filesystem::create_directories(config.out_dir);
      const std::string csv = config.out_dir + "/points.csv";
      const std::string jsonl = config.out_dir + "/points.jsonl";
      emit_points(samples, csv, PointFormat::Csv);
      emit_points(samples, jsonl, PointFormat::Jsonl);
      rep.outputs = {csv, jsonl};
    }
  } else if (config.kind == "intensity") {
    GeneratorRuntime gen{parse_generator(j.at("generator"), "config.generator"), {}, 0.0};
    gen.window = gen.spec.window;
    const std::size_t M = get_M(10000);
    const double r_max = need_number(params, "r", "config.params");
    const std::size_t bins = static_cast<std::size_t>(params.value("bins", 8.0));
    if (gen.spec.type == "gaf" && gen.window <= 0) gen.window = r_max;
    rep.shard_plan = shard_plan_strings(M, config.shards);
    auto samples = draw_samples(gen, root, M, threads);
    const auto edges = linear_edges(params.value("r_min", 0.0), r_max, bins);
    const auto est = estimate_intensity(samples, edges);
    bool all = true;
    for (std::size_t b = 0; b < est.bins(); ++b) {
      // bin-averaged closed form
      double ref = 0.0, area = 0.0;
      const int K = 64;
      for (int i = 0; i < K; ++i) {
        const double rr = edges[b] + (edges[b + 1] - edges[b]) * (i + 0.5) / K;
        ref += reference_intensity(gen.spec, rr) * rr;
        area += rr;
      }
      ref /= area;
      const bool ok = std::abs(est.value[b] - ref) <= 3.0 * est.se[b] + 1e-12;
      all = all && ok;
      add_metric(rep, "intensity_bin_" + std::to_string(b), est.value[b], est.se[b],
                 "|est - " + format_double(ref) + "| <= 3 SE", ok);
    }
    add_metric(rep, "intensity_profile", all ? 1.0 : 0.0, 0.0, "all bins within 3 SE", all);
  } else if (config.kind == "paircorr") {
    GeneratorRuntime gen{parse_generator(j.at("generator"), "config.generator"), {}, 0.0};
    gen.window = gen.spec.window;
    if (gen.spec.type == "projection-dpp") gen.basis = build_basis(gen.spec);
    const std::size_t M = get_M(10000);
    const double window = need_number(params, "window", "config.params");
    const double sep_max = need_number(params, "sep_max", "config.params");
    const std::size_t bins = static_cast<std::size_t>(params.value("sep_bins", 8.0));
    const double sep_min = params.value("sep_min", 0.0);
    if (gen.spec.type == "gaf" && gen.window <= 0) gen.window = window;
    rep.shard_plan = shard_plan_strings(M, config.shards);
    auto samples = draw_samples(gen, root, M, threads);
    const auto edges = linear_edges(sep_min, sep_max, bins);
    const auto est =
        estimate_pair_correlation(samples, edges, window, reference_pair_weight(gen.spec));
    const auto pred = predicted_pair_binned(reference_pair_ratio(gen.spec), edges, window);
    bool all = true;
    for (std::size_t b = 0; b < est.bins(); ++b) {
      const bool ok = std::abs(est.value[b] - pred[b]) <= 3.0 * est.se[b] + 1e-12;
      all = all && ok;
      add_metric(rep, "pair_ratio_bin_" + std::to_string(b), est.value[b], est.se[b],
                 "|est - " + format_double(pred[b]) + "| <= 3 SE", ok);
    }
    add_metric(rep, "pair_profile", all ? 1.0 : 0.0, 0.0, "all bins within 3 SE", all);
  } else if (config.kind == "wick") {
    const HomPoly q = parse_hompoly(params.value("q", std::string("zeta")), "config.params.q");
    const std::uint32_t P = static_cast<std::uint32_t>(params.value("P", 4.0));
    const int phases = static_cast<int>(params.value("phases", 8.0));
    const std::size_t M = get_M(100000);
    rep.shard_plan = shard_plan_strings(M, config.shards);
    RngStream sub = root.split(0);
    const WickCoeffs wc = estimate_wick_coeffs(q, P, sub, M, phases, threads);
    if (q.arity() == 1 && q.degree() == 1) {
      const double ref = -0.5 * kEulerGamma;
      const bool ok = std::abs(wc.c00 - ref) <= 3.0 * wc.c00_se;
      add_metric(rep, "c00", wc.c00, wc.c00_se,
                 "within 3 SE of " + format_double(ref), ok);
    } else {
      add_metric(rep, "c00", wc.c00, wc.c00_se, "none", true, false);
    }
    for (std::uint32_t p = 1; p <= P; ++p) {
      add_metric(rep, "ctilde_sq_" + std::to_string(p), wc.ctilde_sq[p - 1],
                 wc.ctilde_sq_se[p - 1], "none", true, false);
    }
    double worst = 0.0;
    double worst_conj = 0.0;
    for (const auto& e : wc.raw) {
      std::uint32_t pm = 0, pn = 0;
      for (std::size_t i = 0; i < e.m.size(); ++i) {
        pm += e.m[i];
        pn += e.n[i];
      }
      if (pm != pn && e.se > 0) worst = std::max(worst, std::abs(e.value) / e.se);
      if (pm == pn) {
        // conjugate-pair symmetry C_{m,n} = conj(C_{n,m})
        for (const auto& f : wc.raw) {
          if (f.m == e.n && f.n == e.m) {
            const double d = std::abs(e.value - std::conj(f.value));
            const double s = std::hypot(e.se, f.se);
            if (s > 0) worst_conj = std::max(worst_conj, d / s);
          }
        }
      }
    }
    add_metric(rep, "selection_rule_max_sigma", worst, 0.0, "<= 3", worst <= 3.0);
    add_metric(rep, "conjugation_max_sigma", worst_conj, 0.0, "<= 4.5", worst_conj <= 4.5);
  } else if (config.kind == "clt") {
    const HomPoly q = parse_hompoly(params.value("q", std::string("zeta")), "config.params.q");
    const Domain domain = domain_from_name(params.value("domain", std::string("plane")));
    std::vector<double> L_list;
    for (const auto& v : need(params, "L_list", "config.params")) {
      L_list.push_back(v.get<double>());
    }
    const json pj = params.value("phi", json::object());
    RadialBump phi;
    phi.R = pj.value("R", 1.0);
    if (pj.contains("center")) phi.center = json_complex(pj["center"], "config.params.phi.center");
    const std::size_t M = get_M(30000);
    rep.shard_plan = shard_plan_strings(M, config.shards);
    RngStream sub = root.split(0);
    const CltReport clt = clt_experiment(q, domain, L_list, phi, sub, M, 1000000, threads);
    add_metric(rep, "kappa_hat", clt.kappa_hat, clt.kappa_hat_se, "none", true, false);
    for (std::size_t i = 0; i < L_list.size(); ++i) {
      add_metric(rep, "varL_" + format_double(L_list[i]),
                 clt.moments[i].variance * L_list[i], 0.0,
                 "predicted " + format_double(clt.predicted_variance[i] * L_list[i]), true,
                 false);
    }
    for (std::size_t i = 1; i < L_list.size(); ++i) {
      const double ratio = (clt.moments[i].variance * L_list[i]) /
                           (clt.moments[i - 1].variance * L_list[i - 1]);
      const bool ok = ratio >= 0.8 && ratio <= 1.25;
      add_metric(rep, "varL_ratio_" + std::to_string(i), ratio, 0.0, "in [0.8, 1.25]", ok);
    }
    const auto& last = clt.moments.back();
    add_metric(rep, "skewness", last.skewness, 0.0, "|skew| < 0.1",
               std::abs(last.skewness) < 0.1);
    add_metric(rep, "excess_kurtosis", last.excess_kurtosis, 0.0, "|kurt| < 0.25",
               std::abs(last.excess_kurtosis) < 0.25);
  } else if (config.kind == "overcrowd") {
    const json& g = j.at("generator");
    const GeneratorSpec gs = parse_generator(g, "config.generator");
    CountGenerator gen;
    if (gs.type == "gaf" && gs.domain == Domain::Plane) {
      gen.kind = CountGenerator::Kind::PlanarGaf;
      gen.L = gs.L;
    } else if (gs.type == "gaf" && gs.domain == Domain::Disk) {
      gen.kind = CountGenerator::Kind::HyperbolicGaf;
      gen.L = gs.L;
    } else if (gs.type == "hyperbolic-radii") {
      gen.kind = CountGenerator::Kind::HyperbolicRadii;
    } else if (gs.type == "ginibre") {
      gen.kind = CountGenerator::Kind::GinibreMatrix;
      gen.n = gs.n;
    } else if (gs.type == "ginibre-radii") {
      gen.kind = CountGenerator::Kind::GinibreRadii;
      gen.n = static_cast<int>(need_number(g, "n", "config.generator"));
    } else {
      fail("config.generator.type", "unsupported overcrowding generator");
    }
    const double r = need_number(params, "r", "config.params");
    const int m_max = static_cast<int>(params.value("m_max", 6.0));
    const std::size_t M = get_M(100000);
    rep.shard_plan = shard_plan_strings(M, config.shards);
    const DeviationCurve curve = overcrowding_curve(gen, r, m_max, root, M, threads);
    for (std::size_t i = 0; i < curve.m.size(); ++i) {
      if (curve.exact[i]) {
        const bool ok = curve.exact_value[i] >= curve.lo[i] && curve.exact_value[i] <= curve.hi[i];
        add_metric(rep, "p_ge_" + std::to_string(curve.m[i]), curve.estimate[i],
                   0.5 * (curve.hi[i] - curve.lo[i]) / 3.0,
                   "Wilson(3) covers exact " + format_double(curve.exact_value[i]), ok);
      } else {
        add_metric(rep, "p_ge_" + std::to_string(curve.m[i]), curve.estimate[i],
                   0.5 * (curve.hi[i] - curve.lo[i]) / 3.0, "Wilson interval", true, false);
      }
    }
    if (gen.has_exact_law()) {
      const auto exact = count_distribution_exact(gen.exact_law(r), r);
      const double tv = total_variation(curve.mc_dist, exact);
      add_metric(rep, "count_dist_tv", tv, 0.0, "< 0.02", tv < 0.02);
    }
  } else if (config.kind == "invariance") {
    GeneratorRuntime gen{parse_generator(j.at("generator"), "config.generator"), {}, 0.0};
    const Domain domain = gen.spec.domain;
    const MobiusMap map = parse_map(need(params, "map", "config.params"), domain,
                                    "config.params.map");
    std::vector<RegionSpec> regions;
    const json& rj = need(params, "regions", "config.params");
    if (!rj.is_array() || rj.empty()) fail("config.params.regions", "must be a nonempty array");
    for (std::size_t i = 0; i < rj.size(); ++i) {
      regions.push_back(parse_region(rj[i], "config.params.regions[" + std::to_string(i) + "]"));
    }
    // Window: cover every region and its image.
    if (gen.spec.type == "gaf") {
      double need_r = 0.0;
      for (const auto& reg : regions) {
        if (reg.type != "disk") fail("config.params.regions", "gaf generators take disk regions");
        need_r = std::max(need_r, std::abs(reg.center) + reg.r);
        for (int k = 0; k < 256; ++k) {
          const double th = 2.0 * kPi * k / 256;
          const cx boundary = reg.center + reg.r * cx(std::cos(th), std::sin(th));
          need_r = std::max(need_r, std::abs(mobius_apply(map, boundary)));
        }
      }
      gen.window = (domain == Domain::Disk) ? need_r + 0.25 * (1.0 - need_r)
                                            : need_r * 1.02 + 0.02;
      if (domain == Domain::Disk && !(gen.window < 1.0)) {
        fail("config.params.regions", "mapped region leaves the unit disk");
      }
    }
    const std::size_t M = get_M(10000);
    rep.shard_plan = shard_plan_strings(M, config.shards);
    auto samples = draw_samples(gen, root, M, threads);
    const MobiusMap inv = mobius_inverse(map);
    const double alpha_level = params.value("alpha", 0.01) / static_cast<double>(regions.size());
    for (const auto& reg : regions) {
      const RegionPred base = reg.pred();
      std::vector<double> raw(M), mapped(M);
      for (std::size_t i = 0; i < M; ++i) {
        raw[i] = static_cast<double>(count_in_region(samples[i], base));
        // counts in phi(region): pull each point back through phi^{-1}
        mapped[i] = static_cast<double>(count_in_region(samples[i], [&](const Point& p) {
          return base(mobius_apply_point(inv, p));
        }));
      }
      const KsResult ks = ks_two_sample(raw, mapped);
      add_metric(rep, "ks_" + reg.label(), ks.statistic, 0.0,
                 "p=" + format_double(ks.p_value) + " >= " + format_double(alpha_level),
                 ks.p_value >= alpha_level);
    }
  } else if (config.kind == "deviation-slope") {
    std::vector<double> r_list;
    for (const auto& v : need(params, "r_list", "config.params")) {
      r_list.push_back(v.get<double>());
    }
    const double alpha = need_number(params, "alpha", "config.params");
    const double gamma = need_number(params, "gamma", "config.params");
    const std::size_t M = get_M(100000);
    rep.shard_plan = shard_plan_strings(M, config.shards);
    const auto rows = deviation_slope_experiment(r_list, alpha, gamma, root, M, threads);
    double prev = 2.0;
    bool monotone = true;
    for (const auto& row : rows) {
      add_metric(rep, "p_r_" + format_double(row.r), row.probability,
                 (row.hi - row.lo) / 6.0,
                 row.resolved ? "resolved" : "upper bound only", true, false);
      add_metric(rep, "loglog_slope_r_" + format_double(row.r), row.loglog_slope, 0.0,
                 "qualitative", true, false);
      if (row.resolved) {
        if (row.probability > prev + 1e-12) monotone = false;
        prev = row.probability;
      }
    }
    add_metric(rep, "monotone_in_r", monotone ? 1.0 : 0.0, 0.0,
               "P nonincreasing in r", monotone);
  }

  rep.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    const std::string results = config.out_dir + "/results.json";
    const std::string report = config.out_dir + "/report.json";
    std::ofstream(results, std::ios::binary) << rep.results_json();
    std::ofstream(report, std::ios::binary) << rep.report_json();
    rep.outputs.push_back(results);
    rep.outputs.push_back(report);
  }
  return rep;
}

}  // namespace zraf
