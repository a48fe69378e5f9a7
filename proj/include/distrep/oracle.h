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

// Reference solvers used to check the approximation drivers. Both work in
// scaled coordinates; values are delta for L1/Linf and delta^2 for L2.

#ifndef DISTREP_ORACLE_H_
#define DISTREP_ORACLE_H_

#include <cstdint>
#include <vector>

#include "distrep/instance.h"
#include "distrep/rational.h"

namespace distrep {

struct OracleResult {
  Rational value;  // exact optimum, or a certified feasible value
  std::vector<Point> witness;
  uint64_t seed = 0;
};

inline constexpr int kExactOracleMaxRects = 4;
inline constexpr int64_t kExactOracleMaxCoordinate = 32;

// Exact Linf optimum by backtracking over structured coordinates at each
// candidate value, largest first. Requires 2 <= n <= kExactOracleMaxRects and
// D <= kExactOracleMaxCoordinate, otherwise throws std::invalid_argument.
OracleResult exact_linf_optimum(const Instance& inst);

struct LowerBoundOptions {
  int effort = 12;  // finest hill-climbing step is D / 2^effort
  uint64_t seed = 1;
  int starts = 8;   // random restarts on top of the fallback start
};

// Best feasible value found by the fallback placement, seeded multi-start
// hill climbing and (for tiny instances) grid enumeration. The witness is
// verified exactly, so the value never exceeds the optimum. For n = 1 the
// value is 2D; with an identical point pair it is 0.
OracleResult lower_bound_search(const Instance& inst, Norm norm,
                                const LowerBoundOptions& options = {});

}  // namespace distrep

#endif  // DISTREP_ORACLE_H_
