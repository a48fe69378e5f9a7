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

// distrep: command-line front end.
//
// Exit status: 0 success, 1 certified failure (or a failed verification),
// 2 usage or input error, 3 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "distrep/generate.h"
#include "distrep/io.h"
#include "distrep/optimizer.h"
#include "distrep/oracle.h"
#include "distrep/placement.h"

namespace {

using distrep::Json;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Input problems that map to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

distrep::Instance load_instance(const std::string& path) {
  return distrep::instance_from_json(read_json(path));
}

distrep::Rational parse_positive(const std::string& text, const char* flag) {
  distrep::Rational v;
  try {
    v = distrep::Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (v.sign() <= 0) throw UsageError(std::string(flag) + " must be positive");
  return v;
}

struct Common {
  std::string instance_path;
  std::string norm_name = "l1";
  bool verify = false;
  bool deterministic = false;
  std::string svg_path;
};

struct Record {
  Json json;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Record(const std::string& command, const distrep::Instance* inst,
         std::optional<distrep::Norm> norm) {
    json["command"] = command;
    if (norm) json["norm"] = distrep::norm_name(*norm);
    if (inst) json["instance_digest"] = distrep::instance_digest(*inst);
    json["parameters"] = Json::object();
  }

  void emit(bool deterministic) {
    if (!deterministic) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      json["wall_time_ms"] =
          std::chrono::duration<double, std::milli>(elapsed).count();
    }
    std::cout << json.dump(2) << '\n';
  }
};

void maybe_svg(const Common& c, const distrep::Instance& inst,
               const distrep::StoredResult& stored) {
  if (c.svg_path.empty()) return;
  write_text(c.svg_path, distrep::render_svg(inst, stored));
}

// Exact post-hoc check; returns the verdict recorded in the output.
bool post_verify(const distrep::Instance& inst,
                 const std::vector<distrep::Point>& points,
                 const distrep::Rational& time, distrep::Norm norm, Json& out) {
  const auto err = distrep::verify_points(inst, points, time, norm);
  out["verified"] = !err.has_value();
  if (err) out["verification_error"] = *err;
  return !err;
}

int cmd_decide(const Common& c, const std::string& delta,
               const std::string& delta_squared) {
  const distrep::Norm norm = distrep::parse_norm(c.norm_name);
  const distrep::Instance inst = load_instance(c.instance_path);
  distrep::Rational time;
  std::optional<distrep::Rational> given_delta;
  if (!delta_squared.empty()) {
    if (norm != distrep::Norm::kL2) {
      throw UsageError("--delta-squared applies to the l2 norm only");
    }
    time = parse_positive(delta_squared, "--delta-squared");
  } else if (!delta.empty()) {
    given_delta = parse_positive(delta, "--delta");
    time = distrep::uses_squares(norm) ? *given_delta * *given_delta
                                       : *given_delta;
  } else {
    throw UsageError("decide needs --delta or --delta-squared");
  }
  const distrep::Rational scaled = distrep::scale_time(time, norm);

  Record rec("decide", &inst, norm);
  rec.json["parameters"]["delta"] =
      given_delta ? Json(given_delta->to_string()) : Json(nullptr);
  if (distrep::uses_squares(norm)) {
    rec.json["parameters"]["delta_squared"] = time.to_string();
  }
  distrep::PlacementOptions popts;
  popts.verify = c.verify;
  const distrep::PlacementOutcome o =
      distrep::placement(inst, scaled, norm, popts);
  Json result = distrep::placement_to_json(o, scaled, norm);
  bool ok = true;
  if (c.verify && o.success()) {
    ok = post_verify(inst, o.points, scaled, norm, result);
  }
  rec.json["result"] = result;
  rec.emit(c.deterministic);
  if (o.success()) maybe_svg(c, inst, {norm, scaled, o.points});
  if (!ok) return kExitInternal;
  return o.success() ? kExitSuccess : kExitFailure;
}

int cmd_solve(const Common& c, const std::string& probe_log) {
  const distrep::Norm norm = distrep::parse_norm(c.norm_name);
  const distrep::Instance inst = load_instance(c.instance_path);
  Record rec("solve", &inst, norm);

  std::ofstream log_stream;
  distrep::OptimizeOptions opts;
  opts.placement.verify = c.verify;
  if (!probe_log.empty()) {
    log_stream.open(probe_log);
    if (!log_stream) throw UsageError("cannot write " + probe_log);
    opts.log = [&](const distrep::ProbeRecord& p) {
      log_stream << distrep::probe_to_json(p, norm).dump() << '\n';
    };
    rec.json["probe_log"] = probe_log;
  }
  const distrep::OptimizeResult r = distrep::optimize(inst, norm, opts);
  Json result = distrep::optimize_to_json(r);
  bool ok = true;
  if (c.verify) ok = post_verify(inst, r.points, r.time, norm, result);
  rec.json["result"] = result;
  rec.emit(c.deterministic);
  maybe_svg(c, inst, {norm, r.time, r.points});
  return ok ? kExitSuccess : kExitInternal;
}

int cmd_oracle(const Common& c, bool exact, int effort, uint64_t seed,
               int starts) {
  const distrep::Norm norm = distrep::parse_norm(c.norm_name);
  const distrep::Instance inst = load_instance(c.instance_path);
  Record rec("oracle", &inst, norm);
  distrep::OracleResult r;
  if (exact) {
    if (norm != distrep::Norm::kLinf) {
      throw UsageError("the exact oracle supports the linf norm only");
    }
    try {
      r = distrep::exact_linf_optimum(inst);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    rec.json["parameters"]["effort"] = effort;
    rec.json["parameters"]["starts"] = starts;
    rec.json["seed"] = seed;
    r = distrep::lower_bound_search(inst, norm, {effort, seed, starts});
  }
  rec.json["result"] = distrep::oracle_to_json(r, norm, exact);
  rec.emit(c.deterministic);
  maybe_svg(c, inst, {norm, r.value, r.witness});
  return kExitSuccess;
}

// Reads a record written by this tool, or a bare result payload.
std::pair<Json, std::optional<distrep::Norm>> load_result(
    const std::string& path) {
  Json j = read_json(path);
  std::optional<distrep::Norm> norm;
  if (j.contains("norm") && j["norm"].is_string()) {
    norm = distrep::parse_norm(j["norm"].get<std::string>());
  }
  if (j.contains("result")) j = j["result"];
  return {j, norm};
}

distrep::Norm resolve_norm(const Common& c, std::optional<distrep::Norm> stored,
                           bool norm_given) {
  if (norm_given) return distrep::parse_norm(c.norm_name);
  if (!stored) throw UsageError("result has no norm; pass --norm");
  return *stored;
}

int cmd_verify(const Common& c, const std::string& result_path,
               bool norm_given) {
  const distrep::Instance inst = load_instance(c.instance_path);
  auto [payload, stored_norm] = load_result(result_path);
  const distrep::Norm norm = resolve_norm(c, stored_norm, norm_given);
  const distrep::StoredResult s = distrep::stored_result_from_json(payload, norm);
  if (s.points.size() != inst.rects.size()) {
    throw UsageError("result has " + std::to_string(s.points.size()) +
                     " points for " + std::to_string(inst.rects.size()) +
                     " rectangles");
  }
  Record rec("verify", &inst, norm);
  Json result;
  distrep::put_delta(result, "", s.time, norm);
  const bool ok = post_verify(inst, s.points, s.time, norm, result);
  if (s.points.size() >= 2) {
    // Smallest pairwise distance in input units (squared for l2).
    const distrep::QuadScalar achieved =
        distrep::min_pairwise_distance(s.points, norm) /
        distrep::QuadScalar(distrep::uses_squares(norm) ? 4 : 2);
    result["achieved"] = distrep::scalar_to_json(achieved);
    result["achieved_approx"] = achieved.to_double();
  }
  rec.json["result"] = result;
  rec.emit(c.deterministic);
  return ok ? kExitSuccess : kExitFailure;
}

int cmd_generate(const std::string& kind, int n, int64_t max_coord,
                 uint64_t seed, const std::string& out) {
  std::vector<distrep::RawRect> raw;
  try {
    raw = distrep::generate_instance(distrep::parse_generator_kind(kind), n,
                                     max_coord, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json rects = Json::array();
  for (const auto& r : raw) rects.push_back({r[0], r[1], r[2], r[3]});
  write_text(out, Json{{"rects", rects}}.dump(2) + "\n");
  return kExitSuccess;
}

int cmd_svg(const Common& c, const std::string& result_path, bool norm_given,
            const std::string& grid_delta, const std::string& out) {
  const distrep::Instance inst = load_instance(c.instance_path);
  auto [payload, stored_norm] = load_result(result_path);
  const distrep::Norm norm = resolve_norm(c, stored_norm, norm_given);
  const distrep::StoredResult s = distrep::stored_result_from_json(payload, norm);
  if (s.points.size() != inst.rects.size()) {
    throw UsageError("result and instance sizes differ");
  }
  for (size_t k = 0; k < s.points.size(); ++k) {
    if (!distrep::contains(inst.rects[k], s.points[k])) {
      throw UsageError("result point " + std::to_string(k) +
                       " lies outside its rectangle");
    }
  }
  distrep::SvgOptions opts;
  if (!grid_delta.empty()) {
    // The value is delta for l1/linf and delta^2 for l2, like "decide".
    opts.grid_time =
        distrep::scale_time(parse_positive(grid_delta, "--grid-delta"), norm);
  }
  write_text(out, distrep::render_svg(inst, s, opts));
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distant representatives for rectangles"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_instance = true) {
    if (with_instance) {
      sub->add_option("instance", common.instance_path,
                      "Instance JSON file ('-' for stdin)")
          ->required();
    }
    sub->add_option("--norm", common.norm_name, "l1, l2 or linf")
        ->check(CLI::IsMember({"l1", "l2", "linf"}));
    sub->add_flag("--deterministic", common.deterministic,
                  "Omit wall time so output is byte-stable");
  };

  std::string delta, delta_squared, probe_log, result_path, grid_delta, out;
  std::string kind = "random";
  int effort = 12, starts = 8, n = 10;
  int64_t max_coord = 100;
  uint64_t seed = 1;
  bool exact = false;

  CLI::App* decide = app.add_subcommand("decide", "Run the decision procedure");
  add_common(decide);
  decide->add_option("--delta", delta, "delta as p/q");
  decide->add_option("--delta-squared", delta_squared, "delta^2 as p/q (l2)");
  decide->add_flag("--verify", common.verify, "Re-check the points exactly");
  decide->add_option("--svg", common.svg_path, "Write an SVG rendering");

  CLI::App* solve = app.add_subcommand("solve", "Approximate the optimum");
  add_common(solve);
  solve->add_flag("--verify", common.verify, "Re-check the points exactly");
  solve->add_option("--probe-log", probe_log, "JSON-lines log of every probe");
  solve->add_option("--svg", common.svg_path, "Write an SVG rendering");

  CLI::App* oracle = app.add_subcommand("oracle", "Reference solutions");
  add_common(oracle);
  oracle->add_flag("--exact", exact, "Exact linf optimum (n <= 4)");
  oracle->add_option("--effort", effort, "Lower-bound search effort");
  oracle->add_option("--seed", seed, "Lower-bound search seed");
  oracle->add_option("--starts", starts, "Random restarts");
  oracle->add_option("--svg", common.svg_path, "Write an SVG rendering");

  CLI::App* verify = app.add_subcommand("verify", "Check a stored result");
  add_common(verify);
  verify->add_option("result", result_path, "Result JSON file")->required();

  CLI::App* generate = app.add_subcommand("generate", "Write an instance");
  generate->add_option("--kind", kind,
                       "random, stacked-squares, points-line or segments");
  generate->add_option("--n", n, "Number of rectangles");
  generate->add_option("--D", max_coord, "Largest coordinate");
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("-o,--output", out, "Output file (default stdout)");

  CLI::App* svg = app.add_subcommand("svg", "Render a result as SVG");
  add_common(svg);
  svg->add_option("result", result_path, "Result JSON file")->required();
  svg->add_option("--grid-delta", grid_delta,
                  "Also draw the blocker grid at this delta (delta^2 for l2)");
  svg->add_option("-o,--output", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto norm_given = [](CLI::App* sub) { return sub->count("--norm") > 0; };
  try {
    if (*decide) return cmd_decide(common, delta, delta_squared);
    if (*solve) return cmd_solve(common, probe_log);
    if (*oracle) return cmd_oracle(common, exact, effort, seed, starts);
    if (*verify) return cmd_verify(common, result_path, norm_given(verify));
    if (*generate) return cmd_generate(kind, n, max_coord, seed, out);
    if (*svg) {
      return cmd_svg(common, result_path, norm_given(svg), grid_delta, out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
