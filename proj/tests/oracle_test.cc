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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "distrep/optimizer.h"
#include "distrep/oracle.h"
#include "test_support.h"

namespace distrep {
namespace {

using testing::uniform;

Instance points_instance(std::vector<std::pair<int64_t, int64_t>> pts) {
  std::vector<RawRect> raw;
  for (auto [x, y] : pts) raw.push_back({x, x, y, y});
  return ingest(raw);
}

Instance squares(int n) {
  return ingest(std::vector<RawRect>(n, RawRect{0, 2, 0, 2}));
}

TEST(ExactLinf, Examples) {
  const OracleResult two = exact_linf_optimum(points_instance({{0, 0}, {4, 0}}));
  EXPECT_EQ(two.value, Rational(8));
  EXPECT_EQ(two.witness[1].x, QuadScalar(8));
  EXPECT_EQ(exact_linf_optimum(squares(2)).value, Rational(4));
  EXPECT_EQ(exact_linf_optimum(squares(3)).value, Rational(4));
  EXPECT_EQ(exact_linf_optimum(squares(4)).value, Rational(4));
}

TEST(ExactLinf, RefusesLargeInstances) {
  EXPECT_THROW(exact_linf_optimum(squares(1)), std::invalid_argument);
  EXPECT_THROW(exact_linf_optimum(squares(5)), std::invalid_argument);
  EXPECT_THROW(exact_linf_optimum(points_instance({{0, 0}, {17, 0}})),
               std::invalid_argument);
}

// Largest value achievable with every coordinate on a fine grid; never above
// the optimum.
Rational fine_grid_best(const Instance& inst, int64_t den) {
  std::vector<std::vector<std::pair<int64_t, int64_t>>> options;
  for (const Rect& r : inst.rects) {
    std::vector<std::pair<int64_t, int64_t>> pts;
    for (int64_t x = r.left * den; x <= r.right * den; ++x) {
      for (int64_t y = r.bottom * den; y <= r.top * den; ++y) {
        pts.emplace_back(x, y);
      }
    }
    options.push_back(std::move(pts));
  }
  int64_t best = 0;
  std::vector<std::pair<int64_t, int64_t>> chosen;
  auto search = [&](auto&& self, size_t k, int64_t current) -> void {
    if (current <= best) return;
    if (k == options.size()) {
      best = current;
      return;
    }
    for (auto [x, y] : options[k]) {
      int64_t d = current;
      for (auto [u, v] : chosen) {
        d = std::min(d, std::max(std::abs(x - u), std::abs(y - v)));
      }
      chosen.emplace_back(x, y);
      self(self, k + 1, d);
      chosen.pop_back();
    }
  };
  search(search, 0, std::numeric_limits<int64_t>::max());
  return Rational(BigInt(best), BigInt(den));
}

TEST(ExactLinf, AgreesWithCandidatesAndGridSearch) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = static_cast<int>(uniform(rng, 2, 3));
    const Instance inst = ingest(testing::random_rects(rng, n, 4));
    if (inst.identical_point_pair) continue;
    const OracleResult r = exact_linf_optimum(inst);
    EXPECT_EQ(verify_points(inst, r.witness, r.value, Norm::kLinf), std::nullopt);
    const std::vector<Rational> cands = candidate_set_explicit(inst);
    EXPECT_TRUE(std::binary_search(cands.begin(), cands.end(), r.value)) << r.value;
    // Any grid placement is feasible, so it cannot beat the optimum; with
    // denominator n! every candidate t/k is on the grid.
    const int64_t den = n == 2 ? 2 : 6;
    EXPECT_EQ(fine_grid_best(inst, den), r.value);
  }
}

TEST(LowerBound, AtLeastTheFallbackValue) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform(rng, 2, 9));
    const Instance inst = ingest(testing::random_rects(rng, n, 40));
    if (inst.identical_point_pair) continue;
    for (Norm norm : {Norm::kL1, Norm::kL2, Norm::kLinf}) {
      LowerBoundOptions options;
      options.effort = 6;
      options.starts = 2;
      const OracleResult r = lower_bound_search(inst, norm, options);
      const Rational fallback(BigInt(2), BigInt(n));
      EXPECT_GE(r.value, uses_squares(norm) ? fallback * fallback : fallback);
      EXPECT_EQ(verify_points(inst, r.witness, r.value, norm), std::nullopt);
    }
  }
}

TEST(LowerBound, ForcedPoints) {
  const Instance inst = points_instance({{0, 0}, {3, 4}});
  EXPECT_EQ(lower_bound_search(inst, Norm::kL1).value, Rational(14));
  EXPECT_EQ(lower_bound_search(inst, Norm::kLinf).value, Rational(8));
  EXPECT_EQ(lower_bound_search(inst, Norm::kL2).value, Rational(100));
}

TEST(LowerBound, DegenerateCases) {
  const Instance one = ingest(std::vector<RawRect>{{1, 3, 0, 5}});
  EXPECT_EQ(lower_bound_search(one, Norm::kL1).value, Rational(2 * one.D));
  const Instance same = points_instance({{1, 1}, {2, 2}, {1, 1}});
  EXPECT_EQ(lower_bound_search(same, Norm::kLinf).value, Rational(0));
}

TEST(LowerBound, NeverExceedsExactOptimum) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform(rng, 2, 4));
    const Instance inst = ingest(testing::random_rects(rng, n, 8));
    if (inst.identical_point_pair) continue;
    LowerBoundOptions options;
    options.effort = 8;
    options.seed = static_cast<uint64_t>(trial);
    const Rational lb = lower_bound_search(inst, Norm::kLinf, options).value;
    EXPECT_LE(lb, exact_linf_optimum(inst).value);
  }
}

TEST(LowerBound, StackedSquaresNearOptimum) {
  LowerBoundOptions options;
  options.effort = 16;
  const Instance unit_squares =
      ingest(std::vector<RawRect>(3, RawRect{0, 1, 0, 1}));
  const OracleResult r = lower_bound_search(unit_squares, Norm::kL2, options);
  // Scaled by 4 relative to input units.
  const double found = r.value.to_double() / 4;
  const double optimum = 8 - 4 * std::sqrt(3.0);
  EXPECT_LE(found, optimum);
  EXPECT_GT(found, 0.99 * optimum);
}

TEST(LowerBound, ReproducibleForASeed) {
  std::mt19937_64 rng(54);
  const Instance inst = ingest(testing::random_rects(rng, 6, 30));
  LowerBoundOptions options;
  options.seed = 99;
  const OracleResult a = lower_bound_search(inst, Norm::kL1, options);
  const OracleResult b = lower_bound_search(inst, Norm::kL1, options);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.seed, 99u);
}

}  // namespace
}  // namespace distrep
