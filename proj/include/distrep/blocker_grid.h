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

// The delta-scaled grid of blocker shapes.
//
// Grid lines are gamma apart (delta/2 for L1, delta/sqrt(2) for L2, delta for
// Linf) and indexed from the origin. L1 and L2 use +-shapes: the four unit
// segments around an anchor (i, j) with i even and i = j (mod 4). Linf uses
// L-shapes: the segments above and to the right of an anchor with
// i = j (mod 3). Any two shapes are at least delta apart.
//
// The grid is never materialized. A rectangle coordinate is located once
// (GridPos) and every intersection test afterwards is integer arithmetic on
// indices.

#ifndef DISTREP_BLOCKER_GRID_H_
#define DISTREP_BLOCKER_GRID_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "distrep/dual_scalar.h"
#include "distrep/instance.h"
#include "distrep/quad_scalar.h"
#include "distrep/rational.h"

namespace distrep {

struct BlockerShape {
  int64_t i = 0;
  int64_t j = 0;
  ShapeKind kind = ShapeKind::kPlus;

  friend bool operator==(const BlockerShape&, const BlockerShape&) = default;
};

struct BlockerShapeHash {
  size_t operator()(const BlockerShape& b) const {
    uint64_t h = static_cast<uint64_t>(b.i) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<uint64_t>(b.j) + 0x7F4A7C159E3779B9ULL + (h << 6) +
         (h >> 2);
    return static_cast<size_t>(h ^ static_cast<uint64_t>(b.kind));
  }
};

// A unit grid segment. Vertical: x = line, y in [from, from + 1]; horizontal:
// y = line, x in [from, from + 1]. All in grid units.
struct GridSegment {
  bool vertical = true;
  int64_t line = 0;
  int64_t from = 0;
};

// Segments in the fixed order up, right, down, left (+-shapes) or up, right
// (L-shapes).
std::vector<GridSegment> shape_segments(const BlockerShape& b);

bool is_anchor(int64_t i, int64_t j, ShapeKind kind);
inline bool is_anchor(int64_t i, int64_t j, Norm norm) {
  return is_anchor(i, j, shape_kind(norm));
}

// The grid at one "time". `time` is delta (L1, Linf) or delta^2 (L2);
// `perturbation` is 0 for the exact grid, +1 for time + e and -1 for time - e
// with e a positive infinitesimal. F is Rational (L1, Linf) or QuadScalar
// (any norm; required for L2, where gamma = sqrt(time / 2)).
//
// Every decision made on the grid is the sign of an expression affine in
// gamma, and gamma is increasing in time, so gamma carries the perturbation
// directly: gamma = gamma(time) + perturbation * e.
template <class F>
struct GridContext {
  Norm norm = Norm::kLinf;
  Rational time;
  int perturbation = 0;
  Dual<F> gamma;
  // Square of the real part of gamma, rational for every norm.
  Rational gamma_squared;

  GridContext(Norm norm, Rational time, int perturbation = 0);
  GridContext with_perturbation(int p) const {
    return GridContext(norm, time, p);
  }
};

// Location of a coordinate x >= 0 relative to the grid lines: `floor` is the
// largest i with i*gamma <= x, `exact` whether x == floor*gamma (both in the
// dual order).
struct GridPos {
  int64_t floor = 0;
  bool exact = false;

  // Smallest i with i*gamma >= x.
  int64_t ceil() const { return floor + (exact ? 0 : 1); }
};

template <class F>
GridPos grid_position(const Rational& x, const GridContext<F>& ctx);

template <class F>
int64_t grid_index(const Rational& x, const GridContext<F>& ctx) {
  return grid_position(x, ctx).floor;
}

struct RectGrid {
  GridPos left, right, bottom, top;
};

template <class F>
RectGrid locate(const Rect& r, const GridContext<F>& ctx);

bool segment_hits(const GridSegment& s, const RectGrid& r);
bool shape_hits(const BlockerShape& b, const RectGrid& r);

// Visits the shapes meeting the closed rectangle row by row (j ascending,
// then i ascending) until `visit` returns false.
void for_each_touching(const RectGrid& r, ShapeKind kind,
                       const std::function<bool(const BlockerShape&)>& visit);

// Up to `limit` shapes meeting the closed rectangle, in enumeration order.
template <class F>
std::vector<BlockerShape> blockers_touching(const Rect& r,
                                            const GridContext<F>& ctx,
                                            size_t limit);

// Big: the rectangle meets a blocker shape for every time slightly below the
// context's (for the exact grid, at time - e). For a perturbed context the
// configuration is generic, so this is plain intersection there.
template <class F>
bool classify_big(const Rect& r, const GridContext<F>& ctx);

// Distance from the point to the shape in units of gamma: L1 for L1 and L2,
// Linf for Linf.
template <class F>
Dual<F> shape_distance_units(const Dual<F>& u, const Dual<F>& v,
                             const BlockerShape& b, Norm norm);

// Hard cap on |owned_blockers|; exceeding it is a logic error.
inline constexpr size_t kMaxOwnedPerCenter = 13;

// Shapes owned by a small rectangle's centre: Linf distance < delta (Linf),
// L1 distance < delta (L1) or L1 distance < sqrt(2)*delta (L2). The last two
// are both "L1 distance < 2*gamma". Row-major order.
template <class F>
std::vector<BlockerShape> owned_blockers(const Rational& cx,
                                         const Rational& cy,
                                         const GridContext<F>& ctx);
template <class F>
std::vector<BlockerShape> owned_blockers(const Point& center,
                                         const GridContext<F>& ctx);

// A deterministic point of b intersected with r: the anchor clamped into r
// along each segment in order, first success wins. Needs an unperturbed
// context; throws std::logic_error when the intersection is empty.
template <class F>
Point point_in_intersection(const BlockerShape& b, const Rect& r,
                            const GridContext<F>& ctx);

// Exact coordinate k*gamma of the unperturbed grid.
template <class F>
QuadScalar grid_coordinate(int64_t k, const GridContext<F>& ctx);

}  // namespace distrep

#endif  // DISTREP_BLOCKER_GRID_H_
