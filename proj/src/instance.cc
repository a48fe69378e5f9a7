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

#include "distrep/instance.h"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace distrep {

std::string_view norm_name(Norm norm) {
  switch (norm) {
    case Norm::kL1:
      return "l1";
    case Norm::kL2:
      return "l2";
    case Norm::kLinf:
      return "linf";
  }
  return "?";
}

Norm parse_norm(std::string_view name) {
  if (name == "l1") return Norm::kL1;
  if (name == "l2") return Norm::kL2;
  if (name == "linf") return Norm::kLinf;
  throw std::invalid_argument("unknown norm '" + std::string(name) +
                              "' (expected l1, l2 or linf)");
}

int64_t approx_factor_squared(Norm norm) {
  switch (norm) {
    case Norm::kL1:
      return 25;
    case Norm::kL2:
      return 34;
    case Norm::kLinf:
      return 36;
  }
  return 0;
}

ShapeKind shape_kind(Norm norm) {
  return norm == Norm::kLinf ? ShapeKind::kEll : ShapeKind::kPlus;
}

Instance ingest(std::span<const RawRect> raw) {
  Instance inst;
  inst.rects.reserve(raw.size());
  int64_t max_coord = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    const auto& [l, r, b, t] = raw[i];
    const std::string at = " at index " + std::to_string(i);
    if (l < 0 || r < 0 || b < 0 || t < 0) {
      throw IngestError("negative coordinate" + at);
    }
    if (l > r) throw IngestError("left > right" + at);
    if (b > t) throw IngestError("bottom > top" + at);
    if (std::max({l, r, b, t}) > kMaxInputCoordinate) {
      throw IngestError("coordinate exceeds 2^29" + at);
    }
    inst.rects.push_back(Rect{2 * l, 2 * r, 2 * b, 2 * t});
    max_coord = std::max({max_coord, 2 * r, 2 * t});
  }
  // D = 0 would make the search interval empty; the bound only needs to
  // dominate the coordinates.
  inst.D = std::max<int64_t>(max_coord, 2);

  std::vector<int> points;
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.rects[i].is_point()) points.push_back(i);
  }
  std::sort(points.begin(), points.end(), [&](int a, int b) {
    const Rect& ra = inst.rects[a];
    const Rect& rb = inst.rects[b];
    return std::tie(ra.left, ra.bottom, a) < std::tie(rb.left, rb.bottom, b);
  });
  for (size_t k = 1; k < points.size(); ++k) {
    const Rect& p = inst.rects[points[k - 1]];
    const Rect& q = inst.rects[points[k]];
    if (p.left == q.left && p.bottom == q.bottom) {
      std::pair<int, int> pair(points[k - 1], points[k]);
      if (!inst.identical_point_pair || pair < *inst.identical_point_pair) {
        inst.identical_point_pair = pair;
      }
    }
  }
  return inst;
}

std::vector<RawRect> raw_rects(const Instance& inst) {
  std::vector<RawRect> out;
  out.reserve(inst.rects.size());
  for (const Rect& r : inst.rects) {
    out.push_back({r.left / 2, r.right / 2, r.bottom / 2, r.top / 2});
  }
  return out;
}

QuadScalar distance(const Point& p, const Point& q, Norm norm) {
  const QuadScalar dx = abs(p.x - q.x);
  const QuadScalar dy = abs(p.y - q.y);
  switch (norm) {
    case Norm::kL1:
      return dx + dy;
    case Norm::kL2:
      return dx * dx + dy * dy;
    case Norm::kLinf:
      return dx < dy ? dy : dx;
  }
  return QuadScalar();
}

int64_t int_distance(int64_t dx, int64_t dy, Norm norm) {
  dx = std::llabs(dx);
  dy = std::llabs(dy);
  switch (norm) {
    case Norm::kL1:
      return dx + dy;
    case Norm::kL2:
      return dx * dx + dy * dy;
    case Norm::kLinf:
      return std::max(dx, dy);
  }
  return 0;
}

Point rect_center(const Rect& r) {
  return Point{Rational(BigInt(r.left + r.right), BigInt(2)),
               Rational(BigInt(r.bottom + r.top), BigInt(2))};
}

bool contains(const Rect& r, const Point& p) {
  return QuadScalar(r.left) <= p.x && p.x <= QuadScalar(r.right) &&
         QuadScalar(r.bottom) <= p.y && p.y <= QuadScalar(r.top);
}

std::optional<std::string> verify_points(const Instance& inst,
                                         std::span<const Point> points,
                                         const Rational& threshold,
                                         Norm norm) {
  if (points.size() != inst.rects.size()) {
    return "expected " + std::to_string(inst.rects.size()) + " points, got " +
           std::to_string(points.size());
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (!contains(inst.rects[i], points[i])) {
      return "point " + std::to_string(i) + " lies outside its rectangle";
    }
  }
  const QuadScalar bound(threshold);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (distance(points[i], points[j], norm) < bound) {
        return "points " + std::to_string(i) + " and " + std::to_string(j) +
               " are closer than " + threshold.to_string();
      }
    }
  }
  return std::nullopt;
}

QuadScalar min_pairwise_distance(std::span<const Point> points, Norm norm) {
  QuadScalar best = distance(points[0], points[1], norm);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      QuadScalar d = distance(points[i], points[j], norm);
      if (d < best) best = std::move(d);
    }
  }
  return best;
}

}  // namespace distrep
