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

#include "distrep/optimizer.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace distrep {

namespace {

// An entry t / k of the candidate matrix.
struct Entry {
  int64_t num;
  int64_t den;
};

bool entry_less(const Entry& a, const Entry& b) {
  return static_cast<__int128>(a.num) * b.den <
         static_cast<__int128>(b.num) * a.den;
}

int64_t clamp_to_int64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<int64_t>::max())) {
    return std::numeric_limits<int64_t>::max();
  }
  if (v < BigInt(std::numeric_limits<int64_t>::min())) {
    return std::numeric_limits<int64_t>::min();
  }
  return to_int64(v);
}

std::vector<int64_t> pairwise_differences(std::vector<int64_t> coords) {
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  std::vector<int64_t> out;
  for (size_t a = 0; a < coords.size(); ++a) {
    for (size_t b = a + 1; b < coords.size(); ++b) {
      out.push_back(coords[b] - coords[a]);
    }
  }
  return out;
}

std::string outcome_name(const PlacementOutcome& o) {
  if (o.success()) return "success";
  if (std::holds_alternative<SmallPairTooClose>(o.failure)) {
    return "small_pair";
  }
  return "uncovered";
}

// Runs the decision procedure and keeps count of the calls.
class Prober {
 public:
  Prober(const Instance& inst, Norm norm, const OptimizeOptions& options)
      : inst_(inst), norm_(norm), options_(options) {}

  PlacementOutcome run(const Rational& time, int perturbation = 0) {
    PlacementOutcome o = placement_perturbed(inst_, time, norm_, perturbation,
                                             options_.placement);
    ++calls_;
    if (options_.log) {
      options_.log(ProbeRecord{time, perturbation, o.success(),
                               outcome_name(o), o.stats.matching,
                               o.stats.big});
    }
    return o;
  }

  CriticalProbeResult critical(const Rational& time) {
    CriticalProbeResult r;
    r.at_time = run(time);
    if (!r.at_time.success()) {
      r.tag = ProbeTag::kFailsAtDelta;
      return r;
    }
    r.after_time = run(time, +1);
    r.tag = r.after_time.success() ? ProbeTag::kSucceedsNotCritical
                                   : ProbeTag::kCritical;
    return r;
  }

  int calls() const { return calls_; }

 private:
  const Instance& inst_;
  Norm norm_;
  const OptimizeOptions& options_;
  int calls_ = 0;
};

OptimizeResult from_fallback(const Instance& inst, Norm norm, int probes) {
  FallbackPlacement fb = fallback_one_over_n(inst);
  OptimizeResult r;
  r.norm = norm;
  r.time = uses_squares(norm) ? fb.delta * fb.delta : fb.delta;
  r.points = std::move(fb.points);
  r.certificate = Certificate::kFallback1OverN;
  r.probes = probes;
  return r;
}

}  // namespace

CandidateMatrix candidate_matrix(const Instance& inst) {
  std::vector<int64_t> xs, ys;
  for (const Rect& r : inst.rects) {
    xs.push_back(r.left);
    xs.push_back(r.right);
    ys.push_back(r.bottom);
    ys.push_back(r.top);
  }
  CandidateMatrix m;
  m.n = std::max(inst.n(), 1);
  m.numerators = pairwise_differences(std::move(xs));
  const std::vector<int64_t> dy = pairwise_differences(std::move(ys));
  m.numerators.insert(m.numerators.end(), dy.begin(), dy.end());
  std::sort(m.numerators.begin(), m.numerators.end());
  m.numerators.erase(std::unique(m.numerators.begin(), m.numerators.end()),
                     m.numerators.end());
  return m;
}

int64_t count_less_equal(const CandidateMatrix& m, const Rational& v) {
  int64_t count = 0;
  for (int64_t k = 1; k <= m.n; ++k) {
    const int64_t limit = clamp_to_int64((v * Rational(k)).floor());
    count += std::upper_bound(m.numerators.begin(), m.numerators.end(),
                              limit) -
             m.numerators.begin();
  }
  return count;
}

int64_t count_less(const CandidateMatrix& m, const Rational& v) {
  int64_t count = 0;
  for (int64_t k = 1; k <= m.n; ++k) {
    const int64_t limit = clamp_to_int64((v * Rational(k)).ceil());
    count += std::lower_bound(m.numerators.begin(), m.numerators.end(),
                              limit) -
             m.numerators.begin();
  }
  return count;
}

Rational matrix_select(const CandidateMatrix& m, int64_t rank) {
  if (rank < 1 || rank > m.size()) {
    throw std::out_of_range("matrix rank " + std::to_string(rank) +
                            " outside [1, " + std::to_string(m.size()) + "]");
  }
  const auto& t = m.numerators;
  const int64_t rows = static_cast<int64_t>(t.size());
  // Column c holds t[r] / (n - c); lo/hi bound its surviving rows.
  std::vector<int64_t> lo(m.n, 0), hi(m.n, rows);
  std::vector<int64_t> less_end(m.n), equal_end(m.n);
  while (true) {
    int64_t active = 0;
    for (int c = 0; c < m.n; ++c) active += hi[c] - lo[c];

    if (active <= 4 * static_cast<int64_t>(m.n) + 64) {
      std::vector<Entry> rest;
      for (int c = 0; c < m.n; ++c) {
        for (int64_t r = lo[c]; r < hi[c]; ++r) rest.push_back({t[r], m.n - c});
      }
      std::nth_element(rest.begin(), rest.begin() + (rank - 1), rest.end(),
                       entry_less);
      const Entry& e = rest[rank - 1];
      return Rational(BigInt(e.num), BigInt(e.den));
    }

    // Weighted median of the column medians.
    std::vector<std::pair<Entry, int64_t>> medians;
    for (int c = 0; c < m.n; ++c) {
      if (hi[c] == lo[c]) continue;
      medians.push_back({{t[lo[c] + (hi[c] - lo[c]) / 2], m.n - c},
                         hi[c] - lo[c]});
    }
    std::sort(medians.begin(), medians.end(),
              [](const auto& a, const auto& b) {
                return entry_less(a.first, b.first);
              });
    Entry pivot = medians.back().first;
    int64_t weight = 0;
    for (const auto& [e, w] : medians) {
      weight += w;
      if (2 * weight >= active) {
        pivot = e;
        break;
      }
    }

    int64_t below = 0, equal = 0;
    for (int c = 0; c < m.n; ++c) {
      const int64_t k = m.n - c;
      const auto first = t.begin() + lo[c];
      const auto last = t.begin() + hi[c];
      less_end[c] = std::partition_point(first, last, [&](int64_t x) {
                      return entry_less({x, k}, pivot);
                    }) - t.begin();
      equal_end[c] = std::partition_point(first, last, [&](int64_t x) {
                       return !entry_less(pivot, {x, k});
                     }) - t.begin();
      below += less_end[c] - lo[c];
      equal += equal_end[c] - less_end[c];
    }
    if (rank <= below) {
      hi = less_end;
    } else if (rank <= below + equal) {
      return Rational(BigInt(pivot.num), BigInt(pivot.den));
    } else {
      rank -= below + equal;
      lo = equal_end;
    }
  }
}

std::vector<Rational> candidate_set_explicit(const Instance& inst) {
  const CandidateMatrix m = candidate_matrix(inst);
  std::vector<Rational> out;
  out.reserve(m.size());
  for (int64_t t : m.numerators) {
    for (int64_t k = 1; k <= m.n; ++k) {
      out.push_back(Rational(BigInt(t), BigInt(k)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FallbackPlacement fallback_one_over_n(const Instance& inst) {
  if (inst.identical_point_pair) {
    throw std::invalid_argument(
        "two identical point rectangles: the optimum is zero");
  }
  const int64_t n = std::max(inst.n(), 1);
  // Grid point (a, b) sits at (2a/n, 2b/n). Index ranges per rectangle:
  // ceil(lo * n / 2) .. floor(hi * n / 2).
  struct Range {
    int64_t x0, x1, y0, y1;
  };
  auto to_range = [&](const Rect& r) {
    auto lo = [&](int64_t v) {
      return Rational(BigInt(v) * BigInt(n), BigInt(2)).ceil();
    };
    auto hi = [&](int64_t v) {
      return Rational(BigInt(v) * BigInt(n), BigInt(2)).floor();
    };
    return Range{to_int64(lo(r.left)), to_int64(hi(r.right)),
                 to_int64(lo(r.bottom)), to_int64(hi(r.top))};
  };

  std::vector<Range> ranges;
  std::vector<__int128> counts;
  for (const Rect& r : inst.rects) {
    const Range g = to_range(r);
    ranges.push_back(g);
    counts.push_back(static_cast<__int128>(g.x1 - g.x0 + 1) *
                     (g.y1 - g.y0 + 1));
  }
  std::vector<int> order(inst.rects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return counts[a] < counts[b]; });

  std::set<std::pair<int64_t, int64_t>> used;
  FallbackPlacement out;
  out.delta = Rational(BigInt(2), BigInt(n));
  out.points.resize(inst.rects.size());
  for (int k : order) {
    const Range& g = ranges[k];
    bool placed = false;
    for (int64_t a = g.x0; a <= g.x1 && !placed; ++a) {
      for (int64_t b = g.y0; b <= g.y1 && !placed; ++b) {
        if (!used.insert({a, b}).second) continue;
        out.points[k] = Point{QuadScalar(Rational(BigInt(2 * a), BigInt(n))),
                              QuadScalar(Rational(BigInt(2 * b), BigInt(n)))};
        placed = true;
      }
    }
    if (!placed) {
      throw std::logic_error("fallback grid exhausted for rectangle " +
                             std::to_string(k));
    }
  }
  return out;
}

std::string_view certificate_name(Certificate c) {
  switch (c) {
    case Certificate::kUpperEndSuccess:
      return "upper_end_success";
    case Certificate::kBracketFound:
      return "bracket_found";
    case Certificate::kFallback1OverN:
      return "fallback_one_over_n";
    case Certificate::kIdenticalPointsZero:
      return "identical_points_zero";
  }
  return "?";
}

std::string_view l1_l2_strategy() { return "stern-brocot-runs"; }

BigInt critical_value_bound(const Instance& inst, Norm norm) {
  const BigInt d(inst.D);
  const BigInt n(std::max(inst.n(), 1));
  return uses_squares(norm) ? BigInt(8 * d * d * n * n) : BigInt(4 * d * n);
}

int64_t critical_search_budget(const BigInt& bound) {
  const int64_t log_g = static_cast<int64_t>(mpz_sizeinbase(
      bound.get_mpz_t(), 2));
  return 4 * (log_g + 2) * (log_g + 2);
}

OptimizeResult optimize_linf(const Instance& inst,
                             const OptimizeOptions& options) {
  constexpr int64_t kFactor = 6;
  Prober prober(inst, Norm::kLinf, options);
  OptimizeResult result;
  result.norm = Norm::kLinf;

  const Rational upper(2 * inst.D);
  if (inst.n() <= 1) {
    PlacementOutcome o = prober.run(upper);
    result.time = upper;
    result.points = std::move(o.points);
    result.probes = prober.calls();
    return result;
  }

  const CandidateMatrix m = candidate_matrix(inst);
  const int64_t lo_rank =
      count_less(m, Rational(BigInt(1), BigInt(inst.n()))) + 1;
  const int64_t hi_rank = count_less_equal(m, upper);
  if (lo_rank > hi_rank) {
    throw std::logic_error("no candidate value in [1/n, 2D]");
  }
  auto time_at = [&](int64_t rank) {
    return matrix_select(m, rank) / Rational(kFactor);
  };

  Rational hi_time = time_at(hi_rank);
  PlacementOutcome top = prober.run(hi_time);
  if (top.success()) {
    result.time = hi_time;
    result.points = std::move(top.points);
    result.probes = prober.calls();
    return result;
  }

  // Success is known (lo) or implied (lo_rank, unprobed) below failure (hi).
  int64_t lo = lo_rank, hi = hi_rank;
  std::optional<PlacementOutcome> lo_outcome;
  while (hi - lo > 1) {
    const int64_t mid = lo + (hi - lo) / 2;
    const Rational t = time_at(mid);
    PlacementOutcome o = prober.run(t);
    if (o.success()) {
      lo = mid;
      lo_outcome = std::move(o);
    } else {
      hi = mid;
      hi_time = t;
    }
  }
  if (!lo_outcome) {
    lo_outcome = prober.run(time_at(lo));
    if (!lo_outcome->success()) {
      throw std::logic_error(
          "decision procedure failed at the smallest candidate "
          "value; the candidate set is inconsistent");
    }
  }
  result.time = time_at(lo);
  result.points = std::move(lo_outcome->points);
  result.certificate = Certificate::kBracketFound;
  result.failing_time = hi_time;
  result.probes = prober.calls();
  return result;
}

OptimizeResult optimize_l1_l2(const Instance& inst, Norm norm,
                              const OptimizeOptions& options) {
  if (norm == Norm::kLinf) {
    throw std::invalid_argument("optimize_l1_l2 handles L1 and L2 only");
  }
  if (inst.identical_point_pair) {
    throw std::invalid_argument(
        "two identical point rectangles: the optimum is zero");
  }
  Prober prober(inst, norm, options);
  OptimizeResult result;
  result.norm = norm;

  const bool squared = uses_squares(norm);
  const BigInt n(std::max(inst.n(), 1));
  const BigInt d(inst.D);
  Rational low = squared ? Rational(BigInt(1), BigInt(n * n))
                         : Rational(BigInt(1), n);
  Rational high = squared ? Rational(BigInt(4 * d * d)) : Rational(BigInt(2 * d));
  const BigInt bound = critical_value_bound(inst, norm);
  const int64_t budget = critical_search_budget(bound);

  auto finish_critical = [&](const Rational& t, CriticalProbeResult&& r) {
    if (t.num() > bound || t.den() > bound) {
      throw std::logic_error("critical value " + t.to_string() +
                             " exceeds the bound " + bound.get_str());
    }
    result.time = t;
    result.points = std::move(r.at_time.points);
    result.certificate = Certificate::kBracketFound;
    result.critical = true;
    result.critical_values.push_back(t);
    result.probes = prober.calls();
    return result;
  };

  PlacementOutcome top = prober.run(high);
  if (top.success()) {
    result.time = high;
    result.points = std::move(top.points);
    result.probes = prober.calls();
    return result;
  }
  CriticalProbeResult base = prober.critical(low);
  if (base.tag == ProbeTag::kFailsAtDelta) {
    return from_fallback(inst, norm, prober.calls());
  }
  if (base.tag == ProbeTag::kCritical) {
    return finish_critical(low, std::move(base));
  }

  // Stern-Brocot descent between left = pl/ql and right = pr/qr. A critical
  // value with numerator and denominator <= bound lies in (low, high), and
  // each run of equal moves is resolved by binary search on its length.
  BigInt pl(0), ql(1), pr(1), qr(0);
  int64_t critical_probes = 0;
  std::optional<std::pair<Rational, CriticalProbeResult>> found;

  // Classifies a candidate: +1 when it goes right (at or below a success),
  // -1 when it goes left (at or above a failure).
  auto classify = [&](const Rational& x) -> int {
    if (x <= low) return +1;
    if (x >= high) return -1;
    if (++critical_probes > budget) {
      throw std::logic_error(
          "critical value search exceeded its probe budget with bracket [" +
          low.to_string() + ", " + high.to_string() + "]");
    }
    CriticalProbeResult r = prober.critical(x);
    switch (r.tag) {
      case ProbeTag::kCritical:
        found.emplace(x, std::move(r));
        return 0;
      case ProbeTag::kSucceedsNotCritical:
        low = x;
        return +1;
      case ProbeTag::kFailsAtDelta:
        high = x;
        return -1;
    }
    return 0;
  };

  auto max_steps = [&](const BigInt& p0, const BigInt& q0, const BigInt& p1,
                       const BigInt& q1) {
    BigInt k = -1;
    if (p1 > 0) k = (bound - p0) / p1;
    if (q1 > 0) {
      const BigInt kq = (bound - q0) / q1;
      if (k < 0 || kq < k) k = kq;
    }
    return k;
  };

  bool go_right = true;
  while (!found) {
    // Run of k mediant steps toward the far endpoint: value_k =
    // (p0 + k p1) / (q0 + k q1). Find the last k that keeps the direction.
    const BigInt& p0 = go_right ? pl : pr;
    const BigInt& q0 = go_right ? ql : qr;
    const BigInt& p1 = go_right ? pr : pl;
    const BigInt& q1 = go_right ? qr : ql;
    const BigInt limit = max_steps(p0, q0, p1, q1);
    if (limit < 0) {
      throw std::logic_error("critical value search ran out of bounded "
                             "rationals with bracket [" + low.to_string() +
                             ", " + high.to_string() + "]");
    }
    const int want = go_right ? +1 : -1;
    BigInt keep = 0, stop = limit + 1;
    while (stop - keep > 1 && !found) {
      const BigInt mid = keep + (stop - keep) / 2;
      const Rational x(p0 + mid * p1, q0 + mid * q1);
      const int c = classify(x);
      if (found) break;
      if (c == want) {
        keep = mid;
      } else {
        stop = mid;
      }
    }
    if (found) break;
    if (stop > limit) {
      throw std::logic_error(
          "critical value search passed every bounded rational with "
          "bracket [" + low.to_string() + ", " + high.to_string() + "]");
    }
    const BigInt np = p0 + keep * p1, nq = q0 + keep * q1;
    const BigInt fp = p0 + stop * p1, fq = q0 + stop * q1;
    if (go_right) {
      pl = np, ql = nq, pr = fp, qr = fq;
    } else {
      pr = np, qr = nq, pl = fp, ql = fq;
    }
    go_right = !go_right;
  }
  return finish_critical(found->first, std::move(found->second));
}

OptimizeResult optimize(const Instance& inst, Norm norm,
                        const OptimizeOptions& options) {
  if (inst.identical_point_pair) {
    OptimizeResult r;
    r.norm = norm;
    r.time = Rational(0);
    r.certificate = Certificate::kIdenticalPointsZero;
    for (const Rect& rect : inst.rects) r.points.push_back(rect_center(rect));
    return r;
  }
  if (norm == Norm::kLinf) return optimize_linf(inst, options);
  return optimize_l1_l2(inst, norm, options);
}

}  // namespace distrep
