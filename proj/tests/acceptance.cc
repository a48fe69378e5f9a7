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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "distrep/blocker_grid.h"
#include "distrep/generate.h"
#include "distrep/matching.h"
#include "distrep/optimizer.h"
#include "distrep/oracle.h"
#include "distrep/placement.h"
#include "test_support.h"

namespace distrep {
namespace {

using testing::uniform;

constexpr Norm kNorms[] = {Norm::kL1, Norm::kL2, Norm::kLinf};

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects the first few violations of one criterion.
class Tally {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  int failures() const { return failures_; }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << failures_ << " violations";
    for (const std::string& e : examples_) os << "; " << e;
    return {failures_ == 0, os.str()};
  }

 private:
  int failures_ = 0;
  std::vector<std::string> examples_;
};

std::string describe(const Instance& inst, Norm norm, const Rational& time) {
  std::ostringstream os;
  os << norm_name(norm) << " n=" << inst.n() << " D=" << inst.D
     << " t=" << time;
  return os.str();
}

// Exact check that does not go through the library's verifier.
bool points_valid(const Instance& inst, const std::vector<Point>& pts,
                  const Rational& time, Norm norm) {
  if (static_cast<int>(pts.size()) != inst.n()) return false;
  for (int i = 0; i < inst.n(); ++i) {
    const Rect& r = inst.rects[i];
    const Point& p = pts[i];
    if (p.x < QuadScalar(r.left) || p.x > QuadScalar(r.right) ||
        p.y < QuadScalar(r.bottom) || p.y > QuadScalar(r.top)) {
      return false;
    }
  }
  const QuadScalar threshold(time);
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = i + 1; j < inst.n(); ++j) {
      const Point& p = pts[i];
      const Point& q = pts[j];
      if (testing::box_distance(p.x, p.x, p.y, p.y, q.x, q.x, q.y, q.y, norm) <
          threshold) {
        return false;
      }
    }
  }
  return true;
}

Rational approx_factor_time(Norm norm) {
  return Rational(norm == Norm::kL1 ? 5 : norm == Norm::kL2 ? 34 : 6);
}

// The shared random corpus of criteria 1, 2, 5 and 9.
struct CorpusEntry {
  Instance inst;
  Rational time[3];  // per norm
};

std::vector<CorpusEntry> make_corpus(int count) {
  std::mt19937_64 rng(20260101);
  std::vector<CorpusEntry> out;
  for (int k = 0; k < count; ++k) {
    const int n = static_cast<int>(uniform(rng, 1, 40));
    const int64_t max_coord = uniform(rng, 2, 200);
    CorpusEntry e{ingest(testing::random_rects(rng, n, max_coord)), {}};
    for (Norm norm : kNorms) {
      // delta in [1/n, 2D] of input units: [2/n, 2D] scaled. Half of the
      // draws come from the bottom 1/32 of the range, where outcomes mix.
      const Rational lo(BigInt(2), BigInt(n));
      Rational hi(2 * e.inst.D);
      if (rng() % 2) hi = lo + (hi - lo) / Rational(32);
      const Rational delta = testing::random_rational(rng, lo, hi);
      e.time[static_cast<int>(norm)] = uses_squares(norm) ? delta * delta : delta;
    }
    out.push_back(std::move(e));
  }
  return out;
}

int norm_index(Norm norm) { return static_cast<int>(norm); }

struct Outcomes {
  int successes = 0;
  std::vector<std::pair<int, Norm>> failures;  // corpus index, norm
};

Verdict criterion_placement_sound(const std::vector<CorpusEntry>& corpus,
                                  Outcomes* outcomes) {
  Tally tally;
  PlacementOptions options;
  options.verify = false;
  for (size_t k = 0; k < corpus.size(); ++k) {
    const CorpusEntry& e = corpus[k];
    for (Norm norm : kNorms) {
      const Rational& t = e.time[norm_index(norm)];
      const PlacementOutcome out = placement(e.inst, t, norm, options);
      if (out.success()) {
        ++outcomes->successes;
        if (!points_valid(e.inst, out.points, t, norm)) {
          tally.fail(describe(e.inst, norm, t));
        }
      } else {
        outcomes->failures.emplace_back(static_cast<int>(k), norm);
      }
    }
  }
  std::ostringstream os;
  os << corpus.size() << " instances x 3 norms, " << outcomes->successes
     << " successes verified exactly";
  return tally.verdict(os.str());
}

Verdict criterion_failure_certificate(const std::vector<CorpusEntry>& corpus,
                                      const Outcomes& outcomes) {
  Tally tally;
  Rational tightest;  // smallest ratio f * t / lb seen
  bool have = false;
  for (auto [k, norm] : outcomes.failures) {
    const CorpusEntry& e = corpus[k];
    const Rational& t = e.time[norm_index(norm)];
    LowerBoundOptions options;
    options.seed = static_cast<uint64_t>(k);
    options.effort = 10;
    options.starts = 2;
    const OracleResult lb = lower_bound_search(e.inst, norm, options);
    const Rational bound = approx_factor_time(norm) * t;
    if (!(bound > lb.value)) {
      tally.fail(describe(e.inst, norm, t) + " lb=" + lb.value.to_string());
    }
    if (lb.value.sign() > 0) {
      const Rational ratio = bound / lb.value;
      if (!have || ratio < tightest) tightest = ratio;
      have = true;
    }
  }
  std::ostringstream os;
  os << outcomes.failures.size() << " failures checked against the lower bound";
  if (have) os << ", tightest f*delta/lb = " << tightest.to_double();
  return tally.verdict(os.str());
}

Verdict criterion_linf_sandwich() {
  Tally tally;
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 200) {
    const int n = static_cast<int>(uniform(rng, 2, 4));
    const Instance inst = ingest(testing::random_rects(rng, n, 8));
    if (inst.identical_point_pair) continue;
    ++checked;
    const Rational best = exact_linf_optimum(inst).value;
    const OptimizeResult r = optimize_linf(inst);
    const std::vector<Rational> cands = candidate_set_explicit(inst);
    if (!(r.time <= best && best <= Rational(6) * r.time)) {
      tally.fail(describe(inst, Norm::kLinf, r.time) + " opt=" + best.to_string());
    }
    if (!std::binary_search(cands.begin(), cands.end(), best)) {
      tally.fail("optimum " + best.to_string() + " not a candidate");
    }
    if (!points_valid(inst, r.points, r.time, Norm::kLinf)) {
      tally.fail(describe(inst, Norm::kLinf, r.time) + " invalid points");
    }
  }
  return tally.verdict(std::to_string(checked) +
                       " instances with n <= 4, coordinates <= 8");
}

Verdict criterion_stacked_squares() {
  Tally tally;
  const Instance inst =
      ingest(std::vector<RawRect>(3, RawRect{0, 1, 0, 1}));
  // 8 - 4 sqrt 3 in input units; scaled values are 4 times larger.
  const QuadScalar optimum_sq(Rational(8), Rational(-4), Rational(3));
  LowerBoundOptions options;
  options.effort = 20;
  options.starts = 16;
  const OracleResult lb = lower_bound_search(inst, Norm::kL2, options);
  const Rational lb_input = lb.value / Rational(4);
  if (!(QuadScalar(lb_input) >= optimum_sq * QuadScalar(Rational(BigInt(99), BigInt(100))))) {
    tally.fail("lower bound " + std::to_string(lb_input.to_double()));
  }
  const OptimizeResult r = optimize_l1_l2(inst, Norm::kL2);
  const Rational out_input = r.time / Rational(4);
  const Rational slack = Rational(1) - Rational(BigInt(1), BigInt(1000000000));
  if (!(QuadScalar(Rational(34) * out_input) >= optimum_sq * QuadScalar(slack))) {
    tally.fail("34 delta_out^2 = " + std::to_string(34 * out_input.to_double()));
  }
  if (!points_valid(inst, r.points, r.time, Norm::kL2)) tally.fail("invalid points");
  std::ostringstream os;
  os.precision(10);
  os << "delta_lb^2 = " << lb_input.to_double() << ", delta_out^2 = "
     << out_input.to_string() << ", optimum^2 = " << optimum_sq.to_double();
  return tally.verdict(os.str());
}

struct OptimizeStats {
  int runs = 0;
  int criticals = 0;
  int fallbacks = 0;
  int max_probes = 0;
};

Verdict criterion_bit_bounds(const std::vector<CorpusEntry>& corpus) {
  Tally tally;
  OptimizeStats stats;
  for (const CorpusEntry& e : corpus) {
    if (e.inst.identical_point_pair) continue;
    for (Norm norm : {Norm::kL1, Norm::kL2}) {
      const OptimizeResult r = optimize_l1_l2(e.inst, norm);
      ++stats.runs;
      stats.max_probes = std::max(stats.max_probes, r.probes);
      if (r.certificate == Certificate::kFallback1OverN) ++stats.fallbacks;
      const BigInt bound = norm == Norm::kL1
                               ? BigInt(4 * e.inst.D * e.inst.n())
                               : BigInt(8 * e.inst.D * e.inst.D) *
                                     BigInt(e.inst.n() * e.inst.n());
      for (const Rational& c : r.critical_values) {
        ++stats.criticals;
        if (abs(c.num()) > bound || c.den() > bound) {
          tally.fail(describe(e.inst, norm, c) + " bound " + bound.get_str());
        }
      }
      if (!points_valid(e.inst, r.points, r.time, norm)) {
        tally.fail(describe(e.inst, norm, r.time) + " invalid points");
      }
    }
  }
  std::ostringstream os;
  os << stats.runs << " optimizations, " << stats.criticals
     << " critical values, " << stats.fallbacks << " fallbacks, max "
     << stats.max_probes << " placement runs";
  return tally.verdict(os.str());
}

Verdict criterion_closure() {
  Tally tally;
  std::mt19937_64 rng(6);
  int checked = 0, attempts = 0;
  while (checked < 60 && attempts < 2000) {
    ++attempts;
    const int n = static_cast<int>(uniform(rng, 2, 4));
    const Instance inst = ingest(testing::random_rects(rng, n, 6));
    if (inst.identical_point_pair) continue;
    const Norm norm = rng() % 2 ? Norm::kL1 : Norm::kL2;
    const OptimizeResult r = optimize_l1_l2(inst, norm);
    if (!r.critical) continue;
    const Rational& t = r.time;
    if (critical_probe(inst, t, norm).tag != ProbeTag::kCritical) {
      tally.fail(describe(inst, norm, t) + " not critical on re-probe");
      continue;
    }
    const testing::EventSet events(norm, inst.D, t, t + Rational(1));
    const Rational eta = (events.next_after(t) - t) / Rational(2);
    ++checked;
    if (!placement(inst, t, norm).success()) {
      tally.fail(describe(inst, norm, t) + " fails at the critical value");
    }
    if (placement(inst, t + eta, norm).success()) {
      tally.fail(describe(inst, norm, t) + " succeeds at +" + eta.to_string());
    }
  }
  return tally.verdict(std::to_string(checked) +
                       " critical values re-checked just above");
}

// Exact distance between two shapes on the grid of ctx.
QuadScalar shape_distance(const BlockerShape& a, const BlockerShape& b,
                          const GridContext<QuadScalar>& ctx, Norm norm) {
  std::optional<QuadScalar> best;
  auto corners = [&](const GridSegment& s) {
    const QuadScalar line = grid_coordinate(s.line, ctx);
    const QuadScalar from = grid_coordinate(s.from, ctx);
    const QuadScalar to = grid_coordinate(s.from + 1, ctx);
    return s.vertical ? std::array<QuadScalar, 4>{line, line, from, to}
                      : std::array<QuadScalar, 4>{from, to, line, line};
  };
  for (const GridSegment& s : shape_segments(a)) {
    const auto p = corners(s);
    for (const GridSegment& u : shape_segments(b)) {
      const auto q = corners(u);
      const QuadScalar d = testing::box_distance(p[0], p[1], p[2], p[3], q[0],
                                                 q[1], q[2], q[3], norm);
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

Verdict criterion_blocker_separation() {
  Tally tally;
  std::mt19937_64 rng(7);
  int pairs = 0;
  for (Norm norm : kNorms) {
    const ShapeKind kind = shape_kind(norm);
    for (int k = 0; k < 10000; ++k) {
      const Rational t = testing::random_rational(
          rng, Rational(BigInt(1), BigInt(20)), Rational(50), 40);
      const GridContext<QuadScalar> ctx(norm, t);
      auto anchor_near = [&](int64_t i0, int64_t j0) {
        while (true) {
          const int64_t i = i0 + uniform(rng, -4, 4);
          const int64_t j = j0 + uniform(rng, -4, 4);
          if (is_anchor(i, j, kind)) return BlockerShape{i, j, kind};
        }
      };
      const BlockerShape a = anchor_near(uniform(rng, 0, 200), uniform(rng, 0, 200));
      BlockerShape b = anchor_near(a.i, a.j);
      if (b == a) continue;
      ++pairs;
      if (shape_distance(a, b, ctx, norm) < QuadScalar(t)) {
        std::ostringstream os;
        os << norm_name(norm) << " t=" << t << " (" << a.i << "," << a.j
           << ") vs (" << b.i << "," << b.j << ")";
        tally.fail(os.str());
      }
    }
  }
  return tally.verdict(std::to_string(pairs) + " distinct nearby shape pairs");
}

Verdict criterion_matching() {
  Tally tally;
  std::mt19937_64 rng(8);
  for (int k = 0; k < 500; ++k) {
    const BipartiteGraph g = testing::random_bipartite(rng, 12);
    const int got = hopcroft_karp(g).size;
    const int want = testing::exhaustive_matching(g);
    if (got != want) {
      tally.fail("graph " + std::to_string(k) + ": " + std::to_string(got) +
                 " vs " + std::to_string(want));
    }
  }
  return tally.verdict("500 graphs with up to 12+12 vertices");
}

Verdict criterion_fallback(const std::vector<CorpusEntry>& corpus) {
  Tally tally;
  int checked = 0;
  for (const CorpusEntry& e : corpus) {
    if (e.inst.identical_point_pair) continue;
    ++checked;
    FallbackPlacement fb;
    try {
      fb = fallback_one_over_n(e.inst);
    } catch (const std::exception& ex) {
      tally.fail(std::string("did not complete: ") + ex.what());
      continue;
    }
    const Rational delta(BigInt(2), BigInt(e.inst.n()));
    for (Norm norm : kNorms) {
      const Rational t = uses_squares(norm) ? delta * delta : delta;
      if (!points_valid(e.inst, fb.points, t, norm)) {
        tally.fail(describe(e.inst, norm, t));
      }
    }
  }
  return tally.verdict(std::to_string(checked) +
                       " instances, all norms at distance 1/n");
}

Verdict criterion_performance() {
  Tally tally;
  const Instance inst =
      ingest(generate_instance(GeneratorKind::kRandom, 200, 10000, 2026));
  const double log_nd = std::log2(static_cast<double>(inst.n()) * inst.D);
  const double log_n3 = std::log2(std::pow(static_cast<double>(inst.n()), 3));
  std::ostringstream os;
  for (Norm norm : kNorms) {
    OptimizeOptions options;
    options.placement.verify = true;
    const auto start = std::chrono::steady_clock::now();
    const OptimizeResult r = optimize(inst, norm, options);
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const double allowed =
        norm == Norm::kLinf ? 4 * log_n3 : 4 * log_nd * log_nd;
    if (seconds >= 120) tally.fail(std::string(norm_name(norm)) + " too slow");
    if (r.probes > allowed) {
      tally.fail(std::string(norm_name(norm)) + " used " +
                 std::to_string(r.probes) + " placement runs");
    }
    if (!points_valid(inst, r.points, r.time, norm)) {
      tally.fail(std::string(norm_name(norm)) + " invalid points");
    }
    if (norm != kNorms[0]) os << ", ";
    os << norm_name(norm) << " " << std::fixed;
    os.precision(1);
    os << seconds << "s/" << r.probes << " runs (limit "
       << static_cast<int>(allowed) << ")";
  }
  return tally.verdict("n=200 D=10^4: " + os.str());
}

}  // namespace
}  // namespace distrep

int main() {
  using namespace distrep;
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const char* name, const std::function<Verdict()>& run) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %2d %s: %s (%s) [%.1fs]\n", id,
                v.pass ? "PASS" : "FAIL", name, v.detail.c_str(), seconds);
    std::fflush(stdout);
    all = all && v.pass;
  };

  const std::vector<CorpusEntry> corpus = make_corpus(1000);
  Outcomes outcomes;
  report(1, "placement soundness",
         [&] { return criterion_placement_sound(corpus, &outcomes); });
  report(2, "failure certificate",
         [&] { return criterion_failure_certificate(corpus, outcomes); });
  report(3, "linf sandwich against the exact optimum", criterion_linf_sandwich);
  report(4, "stacked squares l2 value", criterion_stacked_squares);
  report(5, "critical value bit bounds",
         [&] { return criterion_bit_bounds(corpus); });
  report(6, "critical values closed at the right", criterion_closure);
  report(7, "blocker separation", criterion_blocker_separation);
  report(8, "matching maximality", criterion_matching);
  report(9, "fallback guarantee", [&] { return criterion_fallback(corpus); });
  report(10, "desk-scale performance", criterion_performance);
  return all ? 0 : 1;
}
