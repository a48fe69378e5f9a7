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

// The approximate decision procedure. Given delta (delta^2 for L2) it either
// returns one point per rectangle with all pairs at least delta apart, or
// certifies that the optimum is below f * delta with f = 5, sqrt(34), 6 for
// L1, L2, Linf.
//
//  1. Classify rectangles as big (robustly meets a blocker shape) or small.
//  2. Represent each small rectangle by its centre.
//  3. Fail if two centres are closer than delta.
//  4. Collect the shapes owned by centres.
//  5. Connect each big rectangle to the unowned shapes it meets, keeping the
//     first n in enumeration order.
//  6. Fail unless a maximum matching covers every big rectangle.
//  7. Pick a point of (rectangle, matched shape) for each big rectangle.

#ifndef DISTREP_PLACEMENT_H_
#define DISTREP_PLACEMENT_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "distrep/blocker_grid.h"
#include "distrep/instance.h"
#include "distrep/matching.h"
#include "distrep/rational.h"

namespace distrep {

struct SmallPairTooClose {
  int i = 0;
  int j = 0;
};

struct MatchingUncovered {
  std::vector<int> rects;
};

struct PlacementStats {
  int big = 0;
  int small = 0;
  int owned = 0;
  int blockers = 0;
  int edges = 0;
  int matching = 0;
};

struct PlacementOutcome {
  // Empty on failure, and also empty for perturbed runs (which only decide).
  std::vector<Point> points;
  std::variant<std::monostate, SmallPairTooClose, MatchingUncovered> failure;
  PlacementStats stats;

  bool success() const {
    return std::holds_alternative<std::monostate>(failure);
  }
};

// The bipartite graph between big rectangles and unowned shapes.
struct MatchGraph {
  std::vector<int> big;                 // left vertex -> rectangle index
  std::vector<BlockerShape> blockers;   // right vertex -> shape
  BipartiteGraph graph;
};

// Intermediate state of one run, exposed for inspection and tests.
struct PlacementStructure {
  std::vector<bool> big;
  std::vector<BlockerShape> owned;  // deduplicated, sorted by (j, i)
  MatchGraph graph;
};

#ifdef NDEBUG
inline constexpr bool kVerifyByDefault = false;
#else
inline constexpr bool kVerifyByDefault = true;
#endif

struct PlacementOptions {
  // Re-check success outcomes in exact arithmetic; a violation throws
  // std::logic_error.
  bool verify = kVerifyByDefault;
};

// Runs the decision procedure at `time` (delta, or delta^2 for L2), which
// must be positive.
PlacementOutcome placement(const Instance& inst, const Rational& time,
                           Norm norm, const PlacementOptions& options = {});

// Decides the outcome at time + perturbation * e, with e a positive
// infinitesimal. No points are produced when perturbation != 0.
PlacementOutcome placement_perturbed(const Instance& inst,
                                     const Rational& time, Norm norm,
                                     int perturbation,
                                     const PlacementOptions& options = {});

// Steps 1, 4 and 5 only (no small-pair check, no matching).
PlacementStructure placement_structure(const Instance& inst,
                                       const Rational& time, Norm norm,
                                       int perturbation = 0);

enum class ProbeTag { kFailsAtDelta, kSucceedsNotCritical, kCritical };

std::string probe_tag_name(ProbeTag tag);

struct CriticalProbeResult {
  ProbeTag tag = ProbeTag::kFailsAtDelta;
  PlacementOutcome at_time;        // the exact run
  PlacementOutcome after_time;     // time + e; unset for kFailsAtDelta
};

// Runs the procedure at time and symbolically at time + e. Critical means
// success at time and failure just after it: a right endpoint of a success
// interval.
CriticalProbeResult critical_probe(const Instance& inst, const Rational& time,
                                   Norm norm,
                                   const PlacementOptions& options = {});

}  // namespace distrep

#endif  // DISTREP_PLACEMENT_H_
