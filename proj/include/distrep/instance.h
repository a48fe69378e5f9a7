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

#ifndef DISTREP_INSTANCE_H_
#define DISTREP_INSTANCE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distrep/quad_scalar.h"
#include "distrep/rational.h"

namespace distrep {

enum class Norm { kL1, kL2, kLinf };

enum class ShapeKind { kPlus, kEll };

std::string_view norm_name(Norm norm);  // "l1", "l2", "linf"
// Throws std::invalid_argument for anything but l1/l2/linf.
Norm parse_norm(std::string_view name);

// Square of the approximation constant: 25, 34 and 36.
int64_t approx_factor_squared(Norm norm);
ShapeKind shape_kind(Norm norm);

// For L2 every threshold is carried as a square: the "time" parameter of a
// placement is delta for L1/Linf and delta^2 for L2.
inline bool uses_squares(Norm norm) { return norm == Norm::kL2; }

// Raw input coordinates must not exceed this bound.
inline constexpr int64_t kMaxInputCoordinate = int64_t{1} << 29;

// Closed axis-aligned rectangle with integer corners. Segments and points are
// allowed.
struct Rect {
  int64_t left = 0;
  int64_t right = 0;
  int64_t bottom = 0;
  int64_t top = 0;

  bool is_point() const { return left == right && bottom == top; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Rectangles after ingestion: every coordinate doubled (so that centres are
// integral) and D the largest doubled coordinate.
struct Instance {
  std::vector<Rect> rects;
  int64_t D = 2;
  // First pair (i < j) of identical single-point rectangles, if any. Such a
  // pair forces the optimum to zero.
  std::optional<std::pair<int, int>> identical_point_pair;

  int n() const { return static_cast<int>(rects.size()); }
};

class IngestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RawRect = std::array<int64_t, 4>;  // left, right, bottom, top

Instance ingest(std::span<const RawRect> raw);
// Inverse of ingest on the rectangle list (halves the coordinates).
std::vector<RawRect> raw_rects(const Instance& inst);

struct Point {
  QuadScalar x;
  QuadScalar y;
};

// L1 and Linf distances, and the squared distance for L2.
QuadScalar distance(const Point& p, const Point& q, Norm norm);

// Same on integer offsets (L2 squared); |dx|, |dy| must stay below 2^30.
int64_t int_distance(int64_t dx, int64_t dy, Norm norm);

Point rect_center(const Rect& r);
bool contains(const Rect& r, const Point& p);

// Checks that points[i] lies in rect i and that every pair is at distance at
// least the threshold (delta, or delta^2 for L2). Returns a description of
// the first violation.
std::optional<std::string> verify_points(const Instance& inst,
                                         std::span<const Point> points,
                                         const Rational& threshold, Norm norm);

// Smallest pairwise distance (squared for L2) of the points; requires n >= 2.
QuadScalar min_pairwise_distance(std::span<const Point> points, Norm norm);

}  // namespace distrep

#endif  // DISTREP_INSTANCE_H_
