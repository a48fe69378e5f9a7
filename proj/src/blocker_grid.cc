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

#include "distrep/blocker_grid.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace distrep {

namespace {

int64_t floor_mod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

QuadScalar to_quad(const Rational& x) { return QuadScalar(x); }
const QuadScalar& to_quad(const QuadScalar& x) { return x; }

template <class F>
Dual<F> max3(Dual<F> a, Dual<F> b, Dual<F> c) {
  if (b > a) a = std::move(b);
  if (c > a) a = std::move(c);
  return a;
}

}  // namespace

std::vector<GridSegment> shape_segments(const BlockerShape& b) {
  std::vector<GridSegment> s;
  s.push_back({true, b.i, b.j});    // up
  s.push_back({false, b.j, b.i});   // right
  if (b.kind == ShapeKind::kPlus) {
    s.push_back({true, b.i, b.j - 1});   // down
    s.push_back({false, b.j, b.i - 1});  // left
  }
  return s;
}

bool is_anchor(int64_t i, int64_t j, ShapeKind kind) {
  if (kind == ShapeKind::kPlus) {
    return floor_mod(i, 2) == 0 && floor_mod(i - j, 4) == 0;
  }
  return floor_mod(i - j, 3) == 0;
}

template <class F>
GridContext<F>::GridContext(Norm norm, Rational time, int perturbation)
    : norm(norm), time(std::move(time)), perturbation(perturbation) {
  if (this->time.sign() <= 0) {
    throw std::invalid_argument("grid time parameter must be positive");
  }
  if (perturbation < -1 || perturbation > 1) {
    throw std::invalid_argument("perturbation must be -1, 0 or +1");
  }
  const F eps = F(Rational(perturbation));
  switch (norm) {
    case Norm::kL1:
      gamma = Dual<F>(F(this->time / Rational(2)), eps);
      gamma_squared = this->time * this->time / Rational(4);
      break;
    case Norm::kLinf:
      gamma = Dual<F>(F(this->time), eps);
      gamma_squared = this->time * this->time;
      break;
    case Norm::kL2:
      if constexpr (std::is_same_v<F, QuadScalar>) {
        gamma = Dual<F>(QuadScalar(Rational(0), Rational(1),
                                   this->time / Rational(2)),
                        eps);
        gamma_squared = this->time / Rational(2);
      } else {
        throw std::invalid_argument("the L2 grid needs QuadScalar coordinates");
      }
      break;
  }
}

template <class F>
GridPos grid_position(const Rational& x, const GridContext<F>& ctx) {
  if (x.sign() >= 0) {
    // floor(x / gamma) = isqrt(floor(x^2 / gamma^2)) for x >= 0.
    const Rational x_sq = x * x;
    const BigInt k = isqrt(floor(x_sq / ctx.gamma_squared));
    const Rational kk(k);
    if (kk * kk * ctx.gamma_squared != x_sq) return GridPos{to_int64(k), false};
    if (k == 0 || ctx.perturbation == 0) return GridPos{to_int64(k), true};
    if (ctx.perturbation > 0) return GridPos{to_int64(k) - 1, false};
    return GridPos{to_int64(k), false};
  }
  const F xv(x);
  const BigInt k = floor(xv / ctx.gamma.value);
  const F kk{Rational(k)};
  const int c = compare(Dual<F>(kk * ctx.gamma.value, kk * ctx.gamma.eps),
                        Dual<F>(xv));
  if (c > 0) return GridPos{to_int64(k) - 1, false};
  return GridPos{to_int64(k), c == 0};
}

template <class F>
RectGrid locate(const Rect& r, const GridContext<F>& ctx) {
  return RectGrid{grid_position(Rational(r.left), ctx),
                  grid_position(Rational(r.right), ctx),
                  grid_position(Rational(r.bottom), ctx),
                  grid_position(Rational(r.top), ctx)};
}

bool segment_hits(const GridSegment& s, const RectGrid& r) {
  const GridPos& across_lo = s.vertical ? r.left : r.bottom;
  const GridPos& across_hi = s.vertical ? r.right : r.top;
  const GridPos& along_lo = s.vertical ? r.bottom : r.left;
  const GridPos& along_hi = s.vertical ? r.top : r.right;
  return across_lo.ceil() <= s.line && s.line <= across_hi.floor &&
         along_lo.ceil() - 1 <= s.from && s.from <= along_hi.floor;
}

bool shape_hits(const BlockerShape& b, const RectGrid& r) {
  for (const GridSegment& s : shape_segments(b)) {
    if (segment_hits(s, r)) return true;
  }
  return false;
}

void for_each_touching(const RectGrid& r, ShapeKind kind,
                       const std::function<bool(const BlockerShape&)>& visit) {
  const int64_t i_lo = r.left.ceil() - 1;
  const int64_t i_hi = r.right.floor + 1;
  const int64_t j_lo = r.bottom.ceil() - 1;
  const int64_t j_hi = r.top.floor + 1;
  const int64_t step = kind == ShapeKind::kPlus ? 4 : 3;
  for (int64_t j = j_lo; j <= j_hi; ++j) {
    if (kind == ShapeKind::kPlus && floor_mod(j, 2) != 0) continue;
    for (int64_t i = i_lo + floor_mod(j - i_lo, step); i <= i_hi; i += step) {
      const BlockerShape b{i, j, kind};
      if (shape_hits(b, r) && !visit(b)) return;
    }
  }
}

template <class F>
std::vector<BlockerShape> blockers_touching(const Rect& r,
                                            const GridContext<F>& ctx,
                                            size_t limit) {
  std::vector<BlockerShape> out;
  if (limit == 0) return out;
  for_each_touching(locate(r, ctx), shape_kind(ctx.norm),
                    [&](const BlockerShape& b) {
                      out.push_back(b);
                      return out.size() < limit;
                    });
  return out;
}

template <class F>
bool classify_big(const Rect& r, const GridContext<F>& ctx) {
  const RectGrid g =
      ctx.perturbation == 0 ? locate(r, ctx.with_perturbation(-1))
                            : locate(r, ctx);
  bool found = false;
  for_each_touching(g, shape_kind(ctx.norm), [&](const BlockerShape&) {
    found = true;
    return false;
  });
  return found;
}

template <class F>
Dual<F> shape_distance_units(const Dual<F>& u, const Dual<F>& v,
                             const BlockerShape& b, Norm norm) {
  const Dual<F> zero;
  Dual<F> best;
  bool first = true;
  for (const GridSegment& s : shape_segments(b)) {
    const Dual<F>& across = s.vertical ? u : v;
    const Dual<F>& along = s.vertical ? v : u;
    const Dual<F> line(F(Rational(s.line)));
    const Dual<F> lo(F(Rational(s.from)));
    const Dual<F> hi(F(Rational(s.from + 1)));
    const Dual<F> d_across = abs(across - line);
    const Dual<F> d_along = max3(zero, lo - along, along - hi);
    Dual<F> d = norm == Norm::kLinf
                    ? (d_across < d_along ? d_along : d_across)
                    : d_across + d_along;
    if (first || d < best) best = std::move(d);
    first = false;
  }
  return best;
}

namespace {

// Floating-point estimate of shape_distance_units, ignoring the eps parts.
double approx_distance_units(double u, double v, const BlockerShape& b,
                             Norm norm) {
  double best = std::numeric_limits<double>::infinity();
  for (const GridSegment& s : shape_segments(b)) {
    const double across = s.vertical ? u : v;
    const double along = s.vertical ? v : u;
    const double d_across = std::abs(across - static_cast<double>(s.line));
    const double d_along =
        std::max({0.0, static_cast<double>(s.from) - along,
                  along - static_cast<double>(s.from + 1)});
    const double d = norm == Norm::kLinf ? std::max(d_across, d_along)
                                         : d_across + d_along;
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

template <class F>
std::vector<BlockerShape> owned_blockers(const Rational& cx,
                                         const Rational& cy,
                                         const GridContext<F>& ctx) {
  const ShapeKind kind = shape_kind(ctx.norm);
  const Dual<F> u = Dual<F>(F(cx)) / ctx.gamma;
  const Dual<F> v = Dual<F>(F(cy)) / ctx.gamma;
  const Dual<F> threshold(F(Rational(ctx.norm == Norm::kLinf ? 1 : 2)));
  const int64_t fx = grid_index(cx, ctx);
  const int64_t fy = grid_index(cy, ctx);
  // Decide with doubles unless the estimate is within `margin` of the
  // threshold, which is far above the rounding error of u and v.
  const double g = to_quad(ctx.gamma.value).to_double();
  const double ud = cx.to_double() / g;
  const double vd = cy.to_double() / g;
  const double limit = ctx.norm == Norm::kLinf ? 1.0 : 2.0;
  const double margin = 1e-9 * (1.0 + std::abs(ud) + std::abs(vd));
  std::vector<BlockerShape> out;
  for (int64_t j = fy - 3; j <= fy + 4; ++j) {
    for (int64_t i = fx - 3; i <= fx + 4; ++i) {
      if (!is_anchor(i, j, kind)) continue;
      const BlockerShape b{i, j, kind};
      const double estimate = approx_distance_units(ud, vd, b, ctx.norm);
      if (estimate > limit + margin) continue;
      if (estimate < limit - margin ||
          shape_distance_units(u, v, b, ctx.norm) < threshold) {
        out.push_back(b);
      }
    }
  }
  if (out.size() > kMaxOwnedPerCenter) {
    throw std::logic_error("centre owns " + std::to_string(out.size()) +
                           " blocker shapes, above the cap");
  }
  return out;
}

template <class F>
std::vector<BlockerShape> owned_blockers(const Point& center,
                                         const GridContext<F>& ctx) {
  if (!center.x.is_rational() || !center.y.is_rational()) {
    throw std::invalid_argument("rectangle centres are rational points");
  }
  return owned_blockers(center.x.a(), center.y.a(), ctx);
}

template <class F>
QuadScalar grid_coordinate(int64_t k, const GridContext<F>& ctx) {
  return QuadScalar(Rational(k)) * to_quad(ctx.gamma.value);
}

template <class F>
Point point_in_intersection(const BlockerShape& b, const Rect& r,
                            const GridContext<F>& ctx) {
  if (ctx.perturbation != 0) {
    throw std::logic_error("point_in_intersection needs the exact grid");
  }
  const QuadScalar ax = grid_coordinate(b.i, ctx);
  const QuadScalar ay = grid_coordinate(b.j, ctx);
  for (const GridSegment& s : shape_segments(b)) {
    const QuadScalar fixed = grid_coordinate(s.line, ctx);
    const QuadScalar across_lo(s.vertical ? r.left : r.bottom);
    const QuadScalar across_hi(s.vertical ? r.right : r.top);
    if (fixed < across_lo || fixed > across_hi) continue;
    QuadScalar lo = grid_coordinate(s.from, ctx);
    QuadScalar hi = grid_coordinate(s.from + 1, ctx);
    const QuadScalar along_lo(s.vertical ? r.bottom : r.left);
    const QuadScalar along_hi(s.vertical ? r.top : r.right);
    if (lo < along_lo) lo = along_lo;
    if (hi > along_hi) hi = along_hi;
    if (lo > hi) continue;
    QuadScalar t = s.vertical ? ay : ax;
    if (t < lo) t = lo;
    if (t > hi) t = hi;
    return s.vertical ? Point{fixed, t} : Point{t, fixed};
  }
  throw std::logic_error("blocker shape does not meet the rectangle");
}

#define DISTREP_INSTANTIATE_GRID(F)                                          \
  template struct GridContext<F>;                                            \
  template GridPos grid_position(const Rational&, const GridContext<F>&);    \
  template RectGrid locate(const Rect&, const GridContext<F>&);              \
  template std::vector<BlockerShape> blockers_touching(                      \
      const Rect&, const GridContext<F>&, size_t);                           \
  template bool classify_big(const Rect&, const GridContext<F>&);            \
  template Dual<F> shape_distance_units(const Dual<F>&, const Dual<F>&,      \
                                        const BlockerShape&, Norm);          \
  template std::vector<BlockerShape> owned_blockers(                         \
      const Rational&, const Rational&, const GridContext<F>&);              \
  template std::vector<BlockerShape> owned_blockers(const Point&,            \
                                                    const GridContext<F>&);  \
  template QuadScalar grid_coordinate(int64_t, const GridContext<F>&);       \
  template Point point_in_intersection(const BlockerShape&, const Rect&,     \
                                       const GridContext<F>&);

DISTREP_INSTANTIATE_GRID(Rational)
DISTREP_INSTANTIATE_GRID(QuadScalar)

#undef DISTREP_INSTANTIATE_GRID

}  // namespace distrep
