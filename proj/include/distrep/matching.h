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

#ifndef DISTREP_MATCHING_H_
#define DISTREP_MATCHING_H_

#include <vector>

namespace distrep {

// Bipartite graph given by left-side adjacency lists into [0, num_right).
struct BipartiteGraph {
  int num_left = 0;
  int num_right = 0;
  std::vector<std::vector<int>> adj;
};

struct Matching {
  std::vector<int> left_to_right;  // -1 when unmatched
  std::vector<int> right_to_left;  // -1 when unmatched
  int size = 0;
};

// Maximum-cardinality matching by Hopcroft-Karp. Vertices are visited in
// index order and edges in adjacency order, so the result is deterministic.
Matching hopcroft_karp(const BipartiteGraph& g);

}  // namespace distrep

#endif  // DISTREP_MATCHING_H_
