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

#include "distrep/generate.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace distrep {

namespace {

// Uniform integer in [lo, hi] from the raw engine output, so results do not
// depend on the standard library's distribution implementation.
int64_t draw(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(rng() % span);
}

RawRect random_segment(std::mt19937_64& rng, int64_t max_coord) {
  const int64_t a = draw(rng, 0, max_coord);
  const int64_t b = draw(rng, 0, max_coord);
  const int64_t c = draw(rng, 0, max_coord);
  if (rng() % 2 == 0) return {std::min(a, b), std::max(a, b), c, c};
  return {c, c, std::min(a, b), std::max(a, b)};
}

}  // namespace

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "random") return GeneratorKind::kRandom;
  if (name == "stacked-squares") return GeneratorKind::kStackedSquares;
  if (name == "points-line") return GeneratorKind::kPointsLine;
  if (name == "segments") return GeneratorKind::kSegments;
  throw std::invalid_argument("unknown generator kind \"" + std::string(name) +
                              "\"");
}

std::string_view generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandom:
      return "random";
    case GeneratorKind::kStackedSquares:
      return "stacked-squares";
    case GeneratorKind::kPointsLine:
      return "points-line";
    case GeneratorKind::kSegments:
      return "segments";
  }
  return "?";
}

std::vector<RawRect> generate_instance(GeneratorKind kind, int n,
                                       int64_t max_coord, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (max_coord < 2) throw std::invalid_argument("D must be at least 2");
  if (max_coord > kMaxInputCoordinate) {
    throw std::invalid_argument("D exceeds 2^29");
  }
  std::mt19937_64 rng(seed);
  std::vector<RawRect> out;
  switch (kind) {
    case GeneratorKind::kStackedSquares:
      out.assign(n, RawRect{0, 1, 0, 1});
      break;
    case GeneratorKind::kPointsLine: {
      // Distinct x positions while they last, so small instances avoid the
      // zero-optimum case.
      const int64_t y = max_coord / 2;
      std::unordered_set<int64_t> used;
      for (int k = 0; k < n; ++k) {
        int64_t x = draw(rng, 0, max_coord);
        if (static_cast<int64_t>(used.size()) <= max_coord) {
          while (used.count(x)) x = draw(rng, 0, max_coord);
          used.insert(x);
        }
        out.push_back({x, x, y, y});
      }
      break;
    }
    case GeneratorKind::kSegments:
      for (int k = 0; k < n; ++k) out.push_back(random_segment(rng, max_coord));
      break;
    case GeneratorKind::kRandom:
      for (int k = 0; k < n; ++k) {
        const uint64_t shape = rng() % 4;
        if (shape == 0) {
          const int64_t x = draw(rng, 0, max_coord);
          const int64_t y = draw(rng, 0, max_coord);
          out.push_back({x, x, y, y});
        } else if (shape == 1) {
          out.push_back(random_segment(rng, max_coord));
        } else {
          const int64_t reach = std::max<int64_t>(1, max_coord / 3);
          const int64_t l = draw(rng, 0, max_coord);
          const int64_t b = draw(rng, 0, max_coord);
          const int64_t r = std::min(max_coord, l + draw(rng, 0, reach));
          const int64_t t = std::min(max_coord, b + draw(rng, 0, reach));
          out.push_back({l, r, b, t});
        }
      }
      break;
  }
  return out;
}

}  // namespace distrep
