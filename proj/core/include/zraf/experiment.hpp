// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zraf {

/// Configuration error with the offending field path in the message
/// ("params.M: must be >= 1").
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A validated experiment description.  `canonical` is the normalized
/// JSON echo (defaults filled in, keys sorted) used in reports and for
/// exact reruns.
struct ExperimentConfig {
  std::string kind;
  std::uint64_t seed = 1;
  int shards = 1;
  std::string out_dir;
  std::string canonical;
  std::string raw;  // parsed source text
};

/// Parse + validate a JSON config text.  Flags override file fields when
/// the optional values are supplied.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig parse_experiment_config(const std::string& json_text,
                                         const std::uint64_t* seed_override,
                                         const int* shards_override,
                                         const std::string* out_override);

struct Metric {
  std::string name;
  double estimate = 0.0;
  double se = 0.0;
  std::string tolerance;  // human-readable statement of the gate
  std::string verdict;    // "pass", "fail" or "info"
};

struct Report {
  std::string config_echo;
  std::vector<Metric> metrics;
  std::vector<std::string> shard_plan;  // "shard 0: reps [0,2500)"
  std::vector<std::string> outputs;     // files written
  double wall_clock_s = 0.0;
  bool all_pass = true;

  /// Deterministic part (no wall clock) and the full report, as JSON.
  std::string results_json() const;
  std::string report_json() const;
};

/// Dispatch and run.  Writes data files under out_dir when the kind
/// produces any, plus results.json (deterministic) and report.json.
Report run_experiment(const ExperimentConfig& config);

}  // namespace zraf
