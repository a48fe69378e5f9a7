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

#include "distrep/matching.h"

#include <limits>
#include <queue>

namespace distrep {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        dist_(g.num_left),
        next_edge_(g.num_left),
        match_left_(g.num_left, -1),
        match_right_(g.num_right, -1) {}

  Matching run() {
    int size = 0;
    while (bfs()) {
      for (int u = 0; u < g_.num_left; ++u) next_edge_[u] = 0;
      for (int u = 0; u < g_.num_left; ++u) {
        if (match_left_[u] == -1 && dfs(u)) ++size;
      }
    }
    return Matching{match_left_, match_right_, size};
  }

 private:
  // Layers the graph from the free left vertices; true if some free right
  // vertex is reachable.
  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < g_.num_left; ++u) {
      dist_[u] = match_left_[u] == -1 ? 0 : kInf;
      if (dist_[u] == 0) q.push(u);
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g_.adj[u]) {
        const int w = match_right_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    const auto& edges = g_.adj[u];
    for (int& k = next_edge_[u]; k < static_cast<int>(edges.size()); ++k) {
      const int v = edges[k];
      const int w = match_right_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++k;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> dist_;
  std::vector<int> next_edge_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
};

}  // namespace

Matching hopcroft_karp(const BipartiteGraph& g) {
  return HopcroftKarp(g).run();
}

}  // namespace distrep
