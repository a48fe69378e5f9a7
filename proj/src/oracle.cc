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

#include "distrep/oracle.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "distrep/optimizer.h"

namespace distrep {

namespace {

using Wide = __int128;

// ---------------------------------------------------------------------------
// Exact Linf oracle

struct Placed {
  int64_t x;
  int64_t y;
};

class LinfSearch {
 public:
  // All coordinates are multiplied by the denominator of delta, so delta
  // itself becomes the integer `sep`.
  LinfSearch(std::vector<std::vector<int64_t>> xs,
             std::vector<std::vector<int64_t>> ys, int64_t sep)
      : xs_(std::move(xs)), ys_(std::move(ys)), sep_(sep),
        chosen_(xs_.size()) {
    order_.resize(xs_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return xs_[a].size() * ys_[a].size() < xs_[b].size() * ys_[b].size();
    });
  }

  bool solve() { return place(0); }
  const std::vector<Placed>& chosen() const { return chosen_; }

 private:
  bool place(size_t depth) {
    if (depth == order_.size()) return true;
    const int k = order_[depth];
    for (int64_t x : xs_[k]) {
      for (int64_t y : ys_[k]) {
        bool ok = true;
        for (size_t d = 0; d < depth && ok; ++d) {
          const Placed& p = chosen_[order_[d]];
          ok = std::max(std::abs(p.x - x), std::abs(p.y - y)) >= sep_;
        }
        if (!ok) continue;
        chosen_[k] = {x, y};
        if (place(depth + 1)) return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int64_t>> xs_;
  std::vector<std::vector<int64_t>> ys_;
  int64_t sep_;
  std::vector<Placed> chosen_;
  std::vector<int> order_;
};

// Values start + k * step (k = 0..n) that fall in [lo, hi], over all starts.
std::vector<int64_t> structured_coords(const std::vector<int64_t>& starts,
                                       int64_t step, int n, int64_t lo,
                                       int64_t hi) {
  std::vector<int64_t> out;
  for (int64_t s : starts) {
    for (int k = 0; k <= n; ++k) {
      const int64_t v = s + k * step;
      if (v >= lo && v <= hi) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Lower-bound search on a fixed-point grid: coordinates are integers over a
// common denominator `scale`.

struct Score {
  Wide min = 0;
  int count = 0;  // pairs at the minimum

  bool better_than(const Score& o) const {
    return min > o.min || (min == o.min && count < o.count);
  }
};

class Climber {
 public:
  Climber(const Instance& inst, Norm norm, int64_t scale)
      : inst_(inst), norm_(norm), n_(inst.n()) {
    for (const Rect& r : inst.rects) {
      lo_x_.push_back(r.left * scale);
      hi_x_.push_back(r.right * scale);
      lo_y_.push_back(r.bottom * scale);
      hi_y_.push_back(r.top * scale);
    }
  }

  Wide dist(int64_t ax, int64_t ay, int64_t bx, int64_t by) const {
    const Wide dx = ax > bx ? Wide(ax) - bx : Wide(bx) - ax;
    const Wide dy = ay > by ? Wide(ay) - by : Wide(by) - ay;
    switch (norm_) {
      case Norm::kL1:
        return dx + dy;
      case Norm::kLinf:
        return std::max(dx, dy);
      case Norm::kL2:
        return dx * dx + dy * dy;
    }
    return 0;
  }

  Score score(const std::vector<int64_t>& x,
              const std::vector<int64_t>& y) const {
    Score s{0, 0};
    bool first = true;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        add(s, first, dist(x[i], y[i], x[j], y[j]));
      }
    }
    return s;
  }

  // Coordinate-wise hill climbing with steps halving from `coarse` to `fine`.
  void climb(std::vector<int64_t>& x, std::vector<int64_t>& y, int64_t coarse,
             int64_t fine) const {
    Score current = score(x, y);
    for (int64_t step = coarse; step >= fine; step /= 2) {
      for (int round = 0; round < 64 * n_; ++round) {
        if (!improve_once(x, y, step, current)) break;
      }
      if (step == fine) break;
    }
  }

  int64_t clamp_x(int i, int64_t v) const {
    return std::clamp(v, lo_x_[i], hi_x_[i]);
  }
  int64_t clamp_y(int i, int64_t v) const {
    return std::clamp(v, lo_y_[i], hi_y_[i]);
  }
  int64_t lo_x(int i) const { return lo_x_[i]; }
  int64_t hi_x(int i) const { return hi_x_[i]; }
  int64_t lo_y(int i) const { return lo_y_[i]; }
  int64_t hi_y(int i) const { return hi_y_[i]; }

 private:
  static void add(Score& s, bool& first, Wide d) {
    if (first || d < s.min) {
      s = {d, 1};
      first = false;
    } else if (d == s.min) {
      ++s.count;
    }
  }

  bool improve_once(std::vector<int64_t>& x, std::vector<int64_t>& y,
                    int64_t step, Score& current) const {
    // Only points on a closest pair can raise the score.
    std::vector<bool> tight(n_, false);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (dist(x[i], y[i], x[j], y[j]) == current.min) {
          tight[i] = tight[j] = true;
        }
      }
    }
    static constexpr int kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                        {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int i = 0; i < n_; ++i) {
      if (!tight[i]) continue;
      Score rest{0, 0};
      bool first = true;
      for (int a = 0; a < n_; ++a) {
        if (a == i) continue;
        for (int b = a + 1; b < n_; ++b) {
          if (b == i) continue;
          add(rest, first, dist(x[a], y[a], x[b], y[b]));
        }
      }
      for (const auto& dir : kDirs) {
        const int64_t nx = clamp_x(i, x[i] + dir[0] * step);
        const int64_t ny = clamp_y(i, y[i] + dir[1] * step);
        if (nx == x[i] && ny == y[i]) continue;
        Score s = rest;
        bool f = first;
        for (int j = 0; j < n_; ++j) {
          if (j != i) add(s, f, dist(nx, ny, x[j], y[j]));
        }
        if (s.better_than(current)) {
          x[i] = nx;
          y[i] = ny;
          current = s;
          return true;
        }
      }
    }
    return false;
  }

  const Instance& inst_;
  Norm norm_;
  int n_;
  std::vector<int64_t> lo_x_, hi_x_, lo_y_, hi_y_;
};

int bit_length(Wide v) {
  int bits = 0;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

Rational wide_to_rational(Wide v) {
  // Split into 64-bit halves; v is non-negative here.
  const uint64_t lo = static_cast<uint64_t>(v);
  const uint64_t hi = static_cast<uint64_t>(v >> 64);
  BigInt r(static_cast<unsigned long>(hi));
  r <<= 64;
  r += BigInt(static_cast<unsigned long>(lo));
  return Rational(r);
}

}  // namespace

OracleResult exact_linf_optimum(const Instance& inst) {
  if (inst.n() < 2 || inst.n() > kExactOracleMaxRects ||
      inst.D > kExactOracleMaxCoordinate) {
    throw std::invalid_argument(
        "exact oracle needs 2 <= n <= " +
        std::to_string(kExactOracleMaxRects) + " and coordinates <= " +
        std::to_string(kExactOracleMaxCoordinate) + " after scaling");
  }
  if (inst.identical_point_pair) {
    OracleResult r;
    r.value = Rational(0);
    for (const Rect& rect : inst.rects) r.witness.push_back(rect_center(rect));
    return r;
  }
  std::vector<int64_t> lefts, bottoms;
  for (const Rect& r : inst.rects) {
    lefts.push_back(r.left);
    bottoms.push_back(r.bottom);
  }
  const std::vector<Rational> candidates = candidate_set_explicit(inst);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const int64_t p = to_int64(it->num());
    const int64_t q = to_int64(it->den());
    auto scaled = [q](std::vector<int64_t> v) {
      for (int64_t& c : v) c *= q;
      return v;
    };
    const std::vector<int64_t> sl = scaled(lefts), sb = scaled(bottoms);
    std::vector<std::vector<int64_t>> xs, ys;
    for (const Rect& r : inst.rects) {
      xs.push_back(structured_coords(sl, p, inst.n(), r.left * q, r.right * q));
      ys.push_back(
          structured_coords(sb, p, inst.n(), r.bottom * q, r.top * q));
    }
    LinfSearch search(std::move(xs), std::move(ys), p);
    if (!search.solve()) continue;
    OracleResult out;
    out.value = *it;
    for (const Placed& c : search.chosen()) {
      out.witness.push_back(
          Point{QuadScalar(Rational(BigInt(c.x), BigInt(q))),
                QuadScalar(Rational(BigInt(c.y), BigInt(q)))});
    }
    if (auto err = verify_points(inst, out.witness, out.value, Norm::kLinf)) {
      throw std::logic_error("exact oracle witness failed verification: " +
                             *err);
    }
    return out;
  }
  throw std::logic_error("no candidate value is feasible");
}

OracleResult lower_bound_search(const Instance& inst, Norm norm,
                                const LowerBoundOptions& options) {
  OracleResult out;
  out.seed = options.seed;
  if (inst.identical_point_pair) {
    out.value = Rational(0);
    for (const Rect& rect : inst.rects) out.witness.push_back(rect_center(rect));
    return out;
  }
  if (inst.n() <= 1) {
    out.value = Rational(2 * inst.D);
    for (const Rect& rect : inst.rects) out.witness.push_back(rect_center(rect));
    return out;
  }

  const int n = inst.n();
  // Common denominator n * 2^effort, capped so that squared distances fit.
  const int coord_bits = bit_length(Wide(inst.D) * n);
  const int effort = std::clamp(options.effort, 0, std::max(0, 60 - coord_bits));
  const int64_t scale = int64_t{n} << effort;
  const Climber climber(inst, norm, scale);
  const int64_t coarse = inst.D * scale;
  const int64_t fine = std::max<int64_t>(1, coarse >> effort);

  std::vector<int64_t> best_x(n), best_y(n);
  const FallbackPlacement fb = fallback_one_over_n(inst);
  for (int i = 0; i < n; ++i) {
    // Fallback coordinates are 2a/n, i.e. 2a * 2^effort over `scale`.
    best_x[i] = to_int64((fb.points[i].x.a() * Rational(scale)).floor());
    best_y[i] = to_int64((fb.points[i].y.a() * Rational(scale)).floor());
  }
  Score best = climber.score(best_x, best_y);
  auto consider = [&](std::vector<int64_t> x, std::vector<int64_t> y) {
    climber.climb(x, y, coarse, fine);
    const Score s = climber.score(x, y);
    if (s.better_than(best)) {
      best = s;
      best_x = std::move(x);
      best_y = std::move(y);
    }
  };

  // Tiny instances: exhaustive search over a coarse grid per rectangle.
  if (n <= 3) {
    const int per_axis = (1 << std::min(effort, 3)) + 1;
    std::vector<std::vector<std::pair<int64_t, int64_t>>> grid(n);
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < per_axis; ++a) {
        for (int b = 0; b < per_axis; ++b) {
          const Wide gx = Wide(climber.lo_x(i)) +
                          Wide(climber.hi_x(i) - climber.lo_x(i)) * a /
                              (per_axis - 1);
          const Wide gy = Wide(climber.lo_y(i)) +
                          Wide(climber.hi_y(i) - climber.lo_y(i)) * b /
                              (per_axis - 1);
          grid[i].push_back({int64_t(gx), int64_t(gy)});
        }
      }
    }
    std::vector<int64_t> x(n), y(n), gx, gy;
    Score grid_best;
    bool have = false;
    std::vector<size_t> idx(n, 0);
    while (true) {
      for (int i = 0; i < n; ++i) {
        x[i] = grid[i][idx[i]].first;
        y[i] = grid[i][idx[i]].second;
      }
      const Score s = climber.score(x, y);
      if (!have || s.better_than(grid_best)) {
        grid_best = s;
        gx = x;
        gy = y;
        have = true;
      }
      int i = 0;
      while (i < n && ++idx[i] == grid[i].size()) idx[i++] = 0;
      if (i == n) break;
    }
    consider(gx, gy);
  }

  consider(best_x, best_y);
  std::mt19937_64 rng(options.seed);
  auto uniform = [&](int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(rng() % span);
  };
  for (int s = 0; s < options.starts; ++s) {
    std::vector<int64_t> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = uniform(climber.lo_x(i), climber.hi_x(i));
      y[i] = uniform(climber.lo_y(i), climber.hi_y(i));
    }
    consider(std::move(x), std::move(y));
  }

  const Rational denom =
      norm == Norm::kL2 ? Rational(scale) * Rational(scale) : Rational(scale);
  out.value = wide_to_rational(best.min) / denom;
  for (int i = 0; i < n; ++i) {
    out.witness.push_back(
        Point{QuadScalar(Rational(BigInt(best_x[i]), BigInt(scale))),
              QuadScalar(Rational(BigInt(best_y[i]), BigInt(scale)))});
  }
  if (auto err = verify_points(inst, out.witness, out.value, norm)) {
    throw std::logic_error("lower bound witness failed verification: " + *err);
  }
  return out;
}

}  // namespace distrep
