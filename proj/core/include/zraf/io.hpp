// Copyright (c) 2026 The zraf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "zraf/point_set.hpp"

namespace zraf {

enum class PointFormat { Csv, Jsonl };

/// Write samples to `path`.
///
/// CSV: header `sample_id,re,im,multiplicity,at_infinity`, one row per
/// point, UTF-8, LF line endings, floats at 17 significant digits.
/// JSONL: one PointSet per line, `{"domain":..., "points":[[re,im],...],
/// "mult":[...], "infinity":[...], "meta":{...}}`.
void emit_points(const std::vector<PointSet>& samples, const std::string& path,
                 PointFormat format);

/// Read back a JSONL file written by emit_points.
std::vector<PointSet> read_points_jsonl(const std::string& path);

/// 17-significant-digit decimal formatting used in all emitted files.
std::string format_double(double x);

}  // namespace zraf
