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

#include "distrep/placement.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace distrep {

namespace {

using ShapeSet = std::unordered_set<BlockerShape, BlockerShapeHash>;

template <class F>
std::vector<bool> classify_all(const Instance& inst,
                               const GridContext<F>& ctx) {
  std::vector<bool> big(inst.rects.size());
  for (size_t k = 0; k < inst.rects.size(); ++k) {
    big[k] = classify_big(inst.rects[k], ctx);
  }
  return big;
}

template <class F>
ShapeSet collect_owned(const Instance& inst, const std::vector<bool>& big,
                       const GridContext<F>& ctx) {
  ShapeSet owned;
  for (size_t k = 0; k < inst.rects.size(); ++k) {
    if (big[k]) continue;
    const Rect& r = inst.rects[k];
    const Rational cx((r.left + r.right) / 2);
    const Rational cy((r.bottom + r.top) / 2);
    for (const BlockerShape& b : owned_blockers(cx, cy, ctx)) owned.insert(b);
  }
  return owned;
}

template <class F>
MatchGraph build_graph(const Instance& inst, const std::vector<bool>& big,
                       const ShapeSet& owned, const GridContext<F>& ctx) {
  MatchGraph g;
  std::unordered_map<BlockerShape, int, BlockerShapeHash> index;
  const ShapeKind kind = shape_kind(ctx.norm);
  const size_t cap = inst.rects.size();
  for (size_t k = 0; k < inst.rects.size(); ++k) {
    if (!big[k]) continue;
    g.big.push_back(static_cast<int>(k));
    std::vector<int>& adj = g.graph.adj.emplace_back();
    for_each_touching(locate(inst.rects[k], ctx), kind,
                      [&](const BlockerShape& b) {
                        if (owned.contains(b)) return true;
                        auto [it, inserted] = index.try_emplace(
                            b, static_cast<int>(g.blockers.size()));
                        if (inserted) g.blockers.push_back(b);
                        adj.push_back(it->second);
                        return adj.size() < cap;
                      });
  }
  g.graph.num_left = static_cast<int>(g.big.size());
  g.graph.num_right = static_cast<int>(g.blockers.size());
  return g;
}

// First pair of small centres closer than the (perturbed) time.
std::optional<SmallPairTooClose> find_close_pair(
    const Instance& inst, const std::vector<bool>& big, const Rational& time,
    int perturbation, Norm norm) {
  std::vector<int> small;
  for (size_t k = 0; k < big.size(); ++k) {
    if (!big[k]) small.push_back(static_cast<int>(k));
  }
  for (size_t a = 0; a < small.size(); ++a) {
    const Rect& p = inst.rects[small[a]];
    for (size_t b = a + 1; b < small.size(); ++b) {
      const Rect& q = inst.rects[small[b]];
      const int64_t d = int_distance(
          (p.left + p.right - q.left - q.right) / 2,
          (p.bottom + p.top - q.bottom - q.top) / 2, norm);
      const int c = compare(Rational(d), time);
      if (c < 0 || (c == 0 && perturbation > 0)) {
        return SmallPairTooClose{small[a], small[b]};
      }
    }
  }
  return std::nullopt;
}

template <class F>
PlacementOutcome run(const Instance& inst, const GridContext<F>& ctx,
                     const PlacementOptions& options) {
  PlacementOutcome out;
  if (inst.identical_point_pair) {
    out.failure = SmallPairTooClose{inst.identical_point_pair->first,
                                    inst.identical_point_pair->second};
    return out;
  }
  const std::vector<bool> big = classify_all(inst, ctx);
  out.stats.big = static_cast<int>(std::count(big.begin(), big.end(), true));
  out.stats.small = inst.n() - out.stats.big;

  if (auto pair = find_close_pair(inst, big, ctx.time, ctx.perturbation,
                                  ctx.norm)) {
    out.failure = *pair;
    return out;
  }

  const ShapeSet owned = collect_owned(inst, big, ctx);
  const MatchGraph g = build_graph(inst, big, owned, ctx);
  out.stats.owned = static_cast<int>(owned.size());
  out.stats.blockers = g.graph.num_right;
  for (const auto& adj : g.graph.adj) {
    out.stats.edges += static_cast<int>(adj.size());
  }

  const Matching m = hopcroft_karp(g.graph);
  out.stats.matching = m.size;
  if (m.size < g.graph.num_left) {
    MatchingUncovered uncovered;
    for (int u = 0; u < g.graph.num_left; ++u) {
      if (m.left_to_right[u] == -1) uncovered.rects.push_back(g.big[u]);
    }
    out.failure = std::move(uncovered);
    return out;
  }

  if (ctx.perturbation != 0) return out;

  out.points.resize(inst.rects.size());
  for (size_t k = 0; k < inst.rects.size(); ++k) {
    if (!big[k]) out.points[k] = rect_center(inst.rects[k]);
  }
  for (int u = 0; u < g.graph.num_left; ++u) {
    const int k = g.big[u];
    out.points[k] = point_in_intersection(
        g.blockers[m.left_to_right[u]], inst.rects[k], ctx);
  }
  if (options.verify) {
    if (auto err = verify_points(inst, out.points, ctx.time, ctx.norm)) {
      throw std::logic_error("placement produced an invalid assignment: " +
                             *err);
    }
  }
  return out;
}

template <class F>
PlacementStructure structure(const Instance& inst, const GridContext<F>& ctx) {
  PlacementStructure s;
  s.big = classify_all(inst, ctx);
  const ShapeSet owned = collect_owned(inst, s.big, ctx);
  s.owned.assign(owned.begin(), owned.end());
  std::sort(s.owned.begin(), s.owned.end(),
            [](const BlockerShape& a, const BlockerShape& b) {
              return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
  s.graph = build_graph(inst, s.big, owned, ctx);
  return s;
}

}  // namespace

PlacementOutcome placement_perturbed(const Instance& inst,
                                     const Rational& time, Norm norm,
                                     int perturbation,
                                     const PlacementOptions& options) {
  if (norm == Norm::kL2) {
    return run(inst, GridContext<QuadScalar>(norm, time, perturbation),
               options);
  }
  return run(inst, GridContext<Rational>(norm, time, perturbation), options);
}

PlacementOutcome placement(const Instance& inst, const Rational& time,
                           Norm norm, const PlacementOptions& options) {
  return placement_perturbed(inst, time, norm, 0, options);
}

PlacementStructure placement_structure(const Instance& inst,
                                       const Rational& time, Norm norm,
                                       int perturbation) {
  if (norm == Norm::kL2) {
    return structure(inst, GridContext<QuadScalar>(norm, time, perturbation));
  }
  return structure(inst, GridContext<Rational>(norm, time, perturbation));
}

std::string probe_tag_name(ProbeTag tag) {
  switch (tag) {
    case ProbeTag::kFailsAtDelta:
      return "fails";
    case ProbeTag::kSucceedsNotCritical:
      return "succeeds";
    case ProbeTag::kCritical:
      return "critical";
  }
  return "?";
}

CriticalProbeResult critical_probe(const Instance& inst, const Rational& time,
                                   Norm norm,
                                   const PlacementOptions& options) {
  CriticalProbeResult r;
  r.at_time = placement(inst, time, norm, options);
  if (!r.at_time.success()) {
    r.tag = ProbeTag::kFailsAtDelta;
    return r;
  }
  r.after_time = placement_perturbed(inst, time, norm, +1, options);
  r.tag = r.after_time.success() ? ProbeTag::kSucceedsNotCritical
                                 : ProbeTag::kCritical;
  return r;
}

}  // namespace distrep
