// Copyright 2026 The distrep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and SVG serialization. Everything written here is in the caller's
// original (unscaled) units; exact values travel as strings.

#ifndef DISTREP_IO_H_
#define DISTREP_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "distrep/instance.h"
#include "distrep/optimizer.h"
#include "distrep/oracle.h"
#include "distrep/placement.h"

namespace distrep {

using Json = nlohmann::ordered_json;

// {"rects": [[left, right, bottom, top], ...]}. Parsing throws IngestError.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// Rationals are "p/q" strings. Irrational values are objects
// {"a": "p/q", "b": "p/q", "r": "p/q"} meaning a + b*sqrt(r).
Json scalar_to_json(const QuadScalar& x);
QuadScalar scalar_from_json(const Json& j);

// Scaled internal values back to input units.
Rational unscale_time(const Rational& time, Norm norm);
Rational scale_time(const Rational& time, Norm norm);
Point unscale_point(const Point& p);
Point scale_point(const Point& p);

// delta as an exact scalar: time itself, or sqrt(time) for L2.
QuadScalar delta_from_time(const Rational& time, Norm norm);

// {"x": ..., "y": ..., "x_approx": ..., "y_approx": ...}, unscaled.
Json point_to_json(const Point& scaled);
Point point_from_json(const Json& j);  // returns scaled coordinates

// Value fields for a time: "delta" (+ "delta_squared" for L2) and
// "delta_approx".
void put_delta(Json& out, std::string_view prefix, const Rational& time,
               Norm norm);

Json placement_to_json(const PlacementOutcome& o, const Rational& time,
                       Norm norm);
Json optimize_to_json(const OptimizeResult& r);
Json oracle_to_json(const OracleResult& r, Norm norm, bool exact);
Json probe_to_json(const ProbeRecord& p, Norm norm);

// Reads the scaled time and points of a "result" payload written by
// placement_to_json, optimize_to_json or oracle_to_json.
struct StoredResult {
  Norm norm = Norm::kL1;
  Rational time;
  std::vector<Point> points;
};
StoredResult stored_result_from_json(const Json& result, Norm norm);

// Stable 64-bit FNV-1a digest of the instance JSON, as 16 hex digits.
std::string instance_digest(const Instance& inst);

struct SvgOptions {
  // Draws the blocker shapes of this time (scaled) when set.
  std::optional<Rational> grid_time;
  int width = 640;
};

// Rectangles, points and disjoint balls of radius delta / 2 around them.
std::string render_svg(const Instance& inst, const StoredResult& result,
                       const SvgOptions& options = {});

}  // namespace distrep

#endif  // DISTREP_IO_H_
