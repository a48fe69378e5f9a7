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

#ifndef DISTREP_GENERATE_H_
#define DISTREP_GENERATE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "distrep/instance.h"

namespace distrep {

enum class GeneratorKind { kRandom, kStackedSquares, kPointsLine, kSegments };

GeneratorKind parse_generator_kind(std::string_view name);
std::string_view generator_kind_name(GeneratorKind kind);

// Deterministic instance in input units with coordinates in [0, max_coord].
//   random          mix of boxes, segments and points
//   stacked-squares n copies of the unit square (max_coord is ignored)
//   points-line     n point rectangles on the line y = max_coord / 2, at
//                   distinct positions while n <= max_coord + 1
//   segments        random horizontal and vertical segments
// Requires n >= 1 and max_coord >= 2; throws std::invalid_argument otherwise.
std::vector<RawRect> generate_instance(GeneratorKind kind, int n,
                                       int64_t max_coord, uint64_t seed);

}  // namespace distrep

#endif  // DISTREP_GENERATE_H_
