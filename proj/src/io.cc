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

#include "distrep/io.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "distrep/blocker_grid.h"

namespace distrep {

namespace {

const Rational kTwo(2);

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string(what) + " must be a \"p/q\" string");
  }
  return Rational::parse(j.get<std::string>());
}

Json failure_to_json(const PlacementOutcome& o) {
  Json f;
  if (const auto* p = std::get_if<SmallPairTooClose>(&o.failure)) {
    f["kind"] = "small_pair_too_close";
    f["rects"] = {p->i, p->j};
  } else if (const auto* u = std::get_if<MatchingUncovered>(&o.failure)) {
    f["kind"] = "matching_uncovered";
    f["rects"] = u->rects;
  }
  return f;
}

Json points_to_json(const std::vector<Point>& points) {
  Json arr = Json::array();
  for (const Point& p : points) arr.push_back(point_to_json(p));
  return arr;
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json rects = Json::array();
  for (const RawRect& r : raw_rects(inst)) {
    rects.push_back({r[0], r[1], r[2], r[3]});
  }
  return Json{{"rects", rects}};
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rects") || !j["rects"].is_array()) {
    throw IngestError("instance must be an object with a \"rects\" array");
  }
  std::vector<RawRect> raw;
  for (size_t k = 0; k < j["rects"].size(); ++k) {
    const Json& r = j["rects"][k];
    if (!r.is_array() || r.size() != 4) {
      throw IngestError("rect at index " + std::to_string(k) +
                        " must be [left, right, bottom, top]");
    }
    RawRect rr;
    for (size_t c = 0; c < 4; ++c) {
      if (!r[c].is_number_integer()) {
        throw IngestError("non-integer coordinate at index " +
                          std::to_string(k));
      }
      rr[c] = r[c].get<int64_t>();
    }
    raw.push_back(rr);
  }
  return ingest(raw);
}

Json scalar_to_json(const QuadScalar& x) {
  if (x.is_rational()) return x.a().to_string();
  return Json{{"a", x.a().to_string()},
              {"b", x.b().to_string()},
              {"r", x.radicand().to_string()}};
}

QuadScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return QuadScalar(rational_field(j, "scalar"));
  if (j.is_object() && j.contains("a") && j.contains("b")) {
    const Rational r = j.contains("r") ? rational_field(j["r"], "r")
                                       : Rational(2);
    return QuadScalar(rational_field(j["a"], "a"), rational_field(j["b"], "b"),
                      r);
  }
  throw std::invalid_argument("scalar must be \"p/q\" or {\"a\", \"b\", \"r\"}");
}

Rational unscale_time(const Rational& time, Norm norm) {
  return uses_squares(norm) ? time / Rational(4) : time / kTwo;
}

Rational scale_time(const Rational& time, Norm norm) {
  return uses_squares(norm) ? time * Rational(4) : time * kTwo;
}

Point unscale_point(const Point& p) {
  return Point{p.x / QuadScalar(kTwo), p.y / QuadScalar(kTwo)};
}

Point scale_point(const Point& p) {
  return Point{p.x * QuadScalar(kTwo), p.y * QuadScalar(kTwo)};
}

QuadScalar delta_from_time(const Rational& time, Norm norm) {
  if (!uses_squares(norm)) return QuadScalar(time);
  if (time.is_zero()) return QuadScalar(Rational(0));
  return QuadScalar(Rational(0), Rational(1), time);
}

Json point_to_json(const Point& scaled) {
  const Point p = unscale_point(scaled);
  return Json{{"x", scalar_to_json(p.x)},
              {"y", scalar_to_json(p.y)},
              {"x_approx", p.x.to_double()},
              {"y_approx", p.y.to_double()}};
}

Point point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
    throw std::invalid_argument("point must have \"x\" and \"y\"");
  }
  return scale_point(
      Point{scalar_from_json(j["x"]), scalar_from_json(j["y"])});
}

void put_delta(Json& out, std::string_view prefix, const Rational& time,
               Norm norm) {
  const std::string p(prefix);
  const Rational t = unscale_time(time, norm);
  const QuadScalar delta = delta_from_time(t, norm);
  out[p + "delta"] = scalar_to_json(delta);
  if (uses_squares(norm)) out[p + "delta_squared"] = t.to_string();
  out[p + "delta_approx"] = delta.to_double();
}

Json placement_to_json(const PlacementOutcome& o, const Rational& time,
                       Norm norm) {
  Json out;
  out["outcome"] = o.success() ? "success" : "failure";
  put_delta(out, "", time, norm);
  if (o.success()) {
    out["points"] = points_to_json(o.points);
  } else {
    out["failure"] = failure_to_json(o);
    out["certificate"] = "delta exceeds delta*/f";
  }
  out["stats"] = Json{{"big", o.stats.big},
                      {"small", o.stats.small},
                      {"owned", o.stats.owned},
                      {"blockers", o.stats.blockers},
                      {"edges", o.stats.edges},
                      {"matching", o.stats.matching}};
  return out;
}

Json optimize_to_json(const OptimizeResult& r) {
  Json out;
  put_delta(out, "", r.time, r.norm);
  out["certificate"] = certificate_name(r.certificate);
  if (r.failing_time) put_delta(out, "failing_", *r.failing_time, r.norm);
  out["critical"] = r.critical;
  out["probes"] = r.probes;
  if (r.norm != Norm::kLinf) out["strategy"] = l1_l2_strategy();
  out["points"] = points_to_json(r.points);
  return out;
}

Json oracle_to_json(const OracleResult& r, Norm norm, bool exact) {
  Json out;
  out["kind"] = exact ? "exact_optimum" : "lower_bound";
  put_delta(out, "", r.value, norm);
  if (!exact) out["seed"] = r.seed;
  out["points"] = points_to_json(r.witness);
  return out;
}

Json probe_to_json(const ProbeRecord& p, Norm norm) {
  Json out;
  put_delta(out, "", p.time, norm);
  out["perturbation"] = p.perturbation;
  out["outcome"] = p.outcome;
  out["matching"] = p.matching;
  out["big"] = p.big;
  return out;
}

StoredResult stored_result_from_json(const Json& result, Norm norm) {
  if (!result.is_object()) {
    throw std::invalid_argument("result payload must be an object");
  }
  StoredResult s;
  s.norm = norm;
  const char* key = uses_squares(norm) ? "delta_squared" : "delta";
  if (!result.contains(key)) {
    throw std::invalid_argument(std::string("result lacks \"") + key + "\"");
  }
  s.time = scale_time(rational_field(result[key], key), norm);
  if (result.contains("points")) {
    for (const Json& p : result["points"]) {
      s.points.push_back(point_from_json(p));
    }
  }
  return s;
}

std::string instance_digest(const Instance& inst) {
  const std::string text = instance_to_json(inst).dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render_svg(const Instance& inst, const StoredResult& result,
                       const SvgOptions& options) {
  // Original units: [0, D/2] on both axes plus a margin.
  const double extent = std::max(1.0, static_cast<double>(inst.D) / 2.0);
  const double margin = extent * 0.05;
  const double span = extent + 2 * margin;
  const double px = options.width / span;
  auto sx = [&](double x) { return fmt((x + margin) * px); };
  auto sy = [&](double y) { return fmt((extent + margin - y) * px); };
  auto len = [&](double v) { return fmt(v * px); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.width << "\" viewBox=\"0 0 "
      << options.width << ' ' << options.width << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (options.grid_time) {
    const Rational& t = *options.grid_time;
    double gamma = 0;
    if (uses_squares(result.norm)) {
      gamma = GridContext<QuadScalar>(result.norm, t, 0).gamma.value.to_double();
    } else {
      gamma = GridContext<Rational>(result.norm, t, 0).gamma.value.to_double();
    }
    const int64_t cells =
        static_cast<int64_t>(std::ceil(static_cast<double>(inst.D) / gamma)) +
        1;
    svg << "<g stroke=\"#9bb7d4\" stroke-width=\"1\">\n";
    if (cells * cells <= 40000) {
      const ShapeKind kind = shape_kind(result.norm);
      for (int64_t j = -1; j <= cells; ++j) {
        for (int64_t i = -1; i <= cells; ++i) {
          if (!is_anchor(i, j, kind)) continue;
          for (const GridSegment& s : shape_segments({i, j, kind})) {
            const double line = s.line * gamma / 2;
            const double a = s.from * gamma / 2, b = (s.from + 1) * gamma / 2;
            const double x1 = s.vertical ? line : a, x2 = s.vertical ? line : b;
            const double y1 = s.vertical ? a : line, y2 = s.vertical ? b : line;
            svg << "<line x1=\"" << sx(x1) << "\" y1=\"" << sy(y1)
                << "\" x2=\"" << sx(x2) << "\" y2=\"" << sy(y2) << "\"/>\n";
          }
        }
      }
    }
    svg << "</g>\n";
  }

  svg << "<g fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\">\n";
  for (const Rect& r : inst.rects) {
    const double l = r.left / 2.0, rt = r.right / 2.0;
    const double b = r.bottom / 2.0, t = r.top / 2.0;
    if (r.is_point()) {
      svg << "<circle cx=\"" << sx(l) << "\" cy=\"" << sy(b)
          << "\" r=\"3\"/>\n";
    } else {
      svg << "<rect x=\"" << sx(l) << "\" y=\"" << sy(t) << "\" width=\""
          << len(rt - l) << "\" height=\"" << len(t - b) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  const QuadScalar delta =
      delta_from_time(unscale_time(result.time, result.norm), result.norm);
  const double radius = delta.to_double() / 2;
  svg << "<g fill=\"#e4572e\" fill-opacity=\"0.15\" stroke=\"#e4572e\">\n";
  for (const Point& scaled : result.points) {
    const Point p = unscale_point(scaled);
    const double x = p.x.to_double(), y = p.y.to_double();
    switch (result.norm) {
      case Norm::kL2:
        svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\""
            << len(radius) << "\"/>\n";
        break;
      case Norm::kLinf:
        svg << "<rect x=\"" << sx(x - radius) << "\" y=\"" << sy(y + radius)
            << "\" width=\"" << len(2 * radius) << "\" height=\""
            << len(2 * radius) << "\"/>\n";
        break;
      case Norm::kL1:
        svg << "<polygon points=\"" << sx(x - radius) << ',' << sy(y) << ' '
            << sx(x) << ',' << sy(y + radius) << ' ' << sx(x + radius) << ','
            << sy(y) << ' ' << sx(x) << ',' << sy(y - radius) << "\"/>\n";
        break;
    }
  }
  svg << "</g>\n<g fill=\"#e4572e\">\n";
  for (const Point& scaled : result.points) {
    const Point p = unscale_point(scaled);
    svg << "<circle cx=\"" << sx(p.x.to_double()) << "\" cy=\""
        << sy(p.y.to_double()) << "\" r=\"2.5\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace distrep
