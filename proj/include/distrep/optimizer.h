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

// Optimization drivers built on the decision procedure.
//
// All values here live in the scaled coordinates produced by ingest(), and
// "time" is delta for L1/Linf and delta^2 for L2.

#ifndef DISTREP_OPTIMIZER_H_
#define DISTREP_OPTIMIZER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distrep/instance.h"
#include "distrep/placement.h"
#include "distrep/rational.h"

namespace distrep {

// The implicit sorted matrix a[r][c] = numerators[r] / (n - c).
struct CandidateMatrix {
  std::vector<int64_t> numerators;  // sorted, distinct, positive
  int n = 1;

  int64_t size() const {
    return static_cast<int64_t>(numerators.size()) * n;
  }
};

// Distinct positive differences between x-coordinates and between
// y-coordinates of all rectangle edges.
CandidateMatrix candidate_matrix(const Instance& inst);

// Number of matrix entries < v and <= v.
int64_t count_less(const CandidateMatrix& m, const Rational& v);
int64_t count_less_equal(const CandidateMatrix& m, const Rational& v);

// The rank-th smallest entry, 1-based, counting duplicates.
Rational matrix_select(const CandidateMatrix& m, int64_t rank);

// Every value difference / k with k in 1..n, deduplicated and sorted.
std::vector<Rational> candidate_set_explicit(const Instance& inst);

struct FallbackPlacement {
  Rational delta;  // 2/n in scaled units
  std::vector<Point> points;
};

// Distinct points of the grid with spacing 2/n, one per rectangle. Throws
// std::invalid_argument on an instance with an identical point pair.
FallbackPlacement fallback_one_over_n(const Instance& inst);

enum class Certificate {
  kUpperEndSuccess,
  kBracketFound,
  kFallback1OverN,
  kIdenticalPointsZero,
};

std::string_view certificate_name(Certificate c);

struct ProbeRecord {
  Rational time;
  int perturbation = 0;
  bool success = false;
  std::string outcome;  // "success", "small_pair" or "uncovered"
  int matching = 0;
  int big = 0;
};

using ProbeLog = std::function<void(const ProbeRecord&)>;

struct OptimizeOptions {
  PlacementOptions placement;
  ProbeLog log;  // optional, called once per decision-procedure run
};

struct OptimizeResult {
  Norm norm = Norm::kL1;
  Rational time;  // certified value at which the points were produced
  std::vector<Point> points;
  Certificate certificate = Certificate::kUpperEndSuccess;
  // kBracketFound only. For Linf the failing candidate above `time`; for
  // L1/L2 empty, since failure happens immediately after `time`.
  std::optional<Rational> failing_time;
  bool critical = false;  // `time` is a right endpoint of a success interval
  int probes = 0;         // decision-procedure runs
  std::vector<Rational> critical_values;
};

// "stern-brocot-runs" for the L1/L2 search.
std::string_view l1_l2_strategy();

// Maximum numerator/denominator of a critical value: 4Dn for L1 and
// 8D^2n^2 (on delta^2) for L2.
BigInt critical_value_bound(const Instance& inst, Norm norm);

// Probe budget of the L1/L2 search, in critical probes.
int64_t critical_search_budget(const BigInt& bound);

OptimizeResult optimize_linf(const Instance& inst,
                             const OptimizeOptions& options = {});
OptimizeResult optimize_l1_l2(const Instance& inst, Norm norm,
                              const OptimizeOptions& options = {});

// Dispatches on the norm and handles the zero-optimum case.
OptimizeResult optimize(const Instance& inst, Norm norm,
                        const OptimizeOptions& options = {});

}  // namespace distrep

#endif  // DISTREP_OPTIMIZER_H_
