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

#include <random>

#include "distrep/matching.h"
#include "test_support.h"

namespace distrep {
namespace {

void expect_consistent(const BipartiteGraph& g, const Matching& m) {
  int size = 0;
  for (int u = 0; u < g.num_left; ++u) {
    const int v = m.left_to_right[u];
    if (v == -1) continue;
    ++size;
    EXPECT_EQ(m.right_to_left[v], u);
    EXPECT_NE(std::find(g.adj[u].begin(), g.adj[u].end(), v), g.adj[u].end());
  }
  EXPECT_EQ(size, m.size);
}

TEST(HopcroftKarp, CompleteTwoByTwo) {
  const BipartiteGraph g{2, 2, {{0, 1}, {0, 1}}};
  const Matching m = hopcroft_karp(g);
  EXPECT_EQ(m.size, 2);
  expect_consistent(g, m);
}

TEST(HopcroftKarp, Star) {
  const BipartiteGraph g{3, 1, {{0}, {0}, {0}}};
  EXPECT_EQ(hopcroft_karp(g).size, 1);
}

TEST(HopcroftKarp, NeedsAugmentingPath) {
  // Greedy takes 0-0 and blocks 1; the optimum is 0-1, 1-0.
  const BipartiteGraph g{2, 2, {{0, 1}, {0}}};
  const Matching m = hopcroft_karp(g);
  EXPECT_EQ(m.size, 2);
  EXPECT_EQ(m.left_to_right[0], 1);
}

TEST(HopcroftKarp, EmptyGraph) {
  EXPECT_EQ(hopcroft_karp(BipartiteGraph{}).size, 0);
  EXPECT_EQ(hopcroft_karp(BipartiteGraph{3, 0, {{}, {}, {}}}).size, 0);
}

TEST(HopcroftKarp, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    const BipartiteGraph g = testing::random_bipartite(rng, 10);
    const Matching m = hopcroft_karp(g);
    EXPECT_EQ(m.size, testing::exhaustive_matching(g));
    expect_consistent(g, m);
  }
}

TEST(HopcroftKarp, Deterministic) {
  std::mt19937_64 rng(14);
  const BipartiteGraph g = testing::random_bipartite(rng, 12);
  EXPECT_EQ(hopcroft_karp(g).left_to_right, hopcroft_karp(g).left_to_right);
}

}  // namespace
}  // namespace distrep
