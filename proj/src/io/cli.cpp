/*
 * Copyright 2026 The sdfslam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sdfslam/io/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <ostream>

#include "sdfslam/core/error.hpp"
#include "sdfslam/io/evaluation.hpp"
#include "sdfslam/io/image.hpp"
#include "sdfslam/io/map_file.hpp"
#include "sdfslam/io/scan_log.hpp"
#include "sdfslam/io/submap_set.hpp"
#include "sdfslam/sim/scenario.hpp"
#include "sdfslam/submap/slam.hpp"

namespace sdfslam {
namespace {

// Matching flags shared by `slam` and `localize`. Unset optional values fall
// back to defaults derived from the map.
struct MatchFlags {
  std::optional<double> trim;
  std::optional<double> huber_delta;
  double eps = 1e-6;

  void add_to(CLI::App& app) {
    app.add_option("--trim", trim, "Stage-2 trim threshold in meters [default: truncation]");
    app.add_option("--huber-delta", huber_delta,
                   "Huber threshold on W*F [default: w_max * truncation / 3]");
    app.add_option("--eps", eps, "Relative cost change that ends Gauss-Newton")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  void apply(MatchConfig& cfg) const {
    if (trim) cfg.trim_threshold = *trim;
    if (huber_delta) cfg.huber_delta = *huber_delta;
    cfg.convergence_eps = eps;
  }
};

struct SimulateFlags {
  std::string scenario;
  std::string builtin;
  std::string out;
  std::string gt_out;
  std::optional<std::uint64_t> seed;
  std::optional<double> noise_sigma;
  std::optional<double> outlier_rate;
};

struct SlamFlags {
  std::string log;
  std::string map;
  std::string trajectory;
  std::string submaps;
  SubmapOptions submap_options;
  std::optional<int> max_expansions;
  int iters1 = 10;
  int iters2 = 20;
  MatchFlags match;
};

struct MergeFlags {
  std::string submaps;
  std::string out;
};

struct LocalizeFlags {
  std::string map;
  std::string log;
  std::string out;
  std::vector<double> init;
  int iterations = 5;
  MatchFlags match;
};

struct EvalFlags {
  std::string estimate;
  std::string truth;
};

struct ExportFlags {
  std::string map;
  std::string out;
};

void run_simulate(const SimulateFlags& f, std::ostream& out) {
  Scenario scenario;
  if (!f.scenario.empty()) {
    scenario = load_scenario(f.scenario);
  } else if (f.builtin == "rectangle") {
    scenario = rectangle_room_scenario();
  } else {
    throw Error("unknown builtin scenario '" + f.builtin + "'");
  }
  if (f.seed) scenario.model.seed = *f.seed;
  if (f.noise_sigma) scenario.model.noise_sigma = *f.noise_sigma;
  if (f.outlier_rate) scenario.model.outlier_rate = *f.outlier_rate;

  const auto records =
      run_scenario(scenario.world, scenario.script(), scenario.model, scenario.rate_hz);
  save_scan_log(f.out, records);
  if (!f.gt_out.empty()) save_trajectory(f.gt_out, ground_truth_trajectory(records));
  out << "wrote " << records.size() << " scans to " << f.out << "\n";
}

void run_slam_command(const SlamFlags& f, std::ostream& out) {
  const auto records = load_scan_log(f.log);
  if (records.empty()) throw Error("scan log " + f.log + " is empty");

  SubmapOptions submap_options = f.submap_options;
  submap_options.policy = f.max_expansions ? ExpansionPolicy{*f.max_expansions}
                                           : ExpansionPolicy::for_resolution(submap_options.resolution);
  SlamOptions options = SlamOptions::defaults_for(submap_options);
  options.match.max_iters_stage1 = f.iters1;
  options.match.max_iters_stage2 = f.iters2;
  f.match.apply(options.match);

  // The map frame is the first ground-truth pose when the log has one.
  const Pose2 initial = records.front().ground_truth.value_or(Pose2());
  const SlamResult result = run_slam(records, options, initial);

  const std::vector<Submap> submaps(result.submaps.begin(), result.submaps.end());
  const MergedMap merged = merge_submaps(submaps);
  save_map(merged.grid, f.map);
  save_trajectory(f.trajectory, result.trajectory);
  if (!f.submaps.empty()) save_submap_set(submaps, f.submaps);
  out << "processed " << records.size() << " scans into " << submaps.size() << " submaps, "
      << result.match_failures << " match failures\n";
}

void run_merge(const MergeFlags& f, std::ostream& out) {
  const auto submaps = load_submap_set(f.submaps);
  const MergedMap merged = merge_submaps(submaps);
  save_map(merged.grid, f.out);
  out << "merged " << merged.provenance.size() << " submaps into " << merged.grid.geometry().width()
      << "x" << merged.grid.geometry().height() << " cells\n";
}

void run_localize(const LocalizeFlags& f, std::ostream& out) {
  MergedMap merged{load_map(f.map), {}};
  const auto records = load_scan_log(f.log);
  if (records.empty()) throw Error("scan log " + f.log + " is empty");

  MatchConfig cfg = MatchConfig::for_grid(merged.grid);
  f.match.apply(cfg);

  Pose2 init = records.front().ground_truth.value_or(Pose2());
  if (!f.init.empty()) init = Pose2(f.init[0], f.init[1], f.init[2]);

  std::vector<TimedPose> trajectory;
  std::vector<double> seconds;
  std::size_t failures = 0;
  for (const ScanLogRecord& record : records) {
    const Pose2 guess =
        trajectory.empty() ? init : predict_pose(trajectory, record.timestamp());
    Pose2 pose = guess;
    const auto start = std::chrono::steady_clock::now();
    try {
      pose = pure_localize(merged, record.scan, guess, f.iterations, cfg).pose;
    } catch (const SingularHessian&) {
      ++failures;
    } catch (const TooFewPoints&) {
      ++failures;
    }
    const auto stop = std::chrono::steady_clock::now();
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
    trajectory.push_back({record.timestamp(), pose});
  }
  if (!f.out.empty()) save_trajectory(f.out, trajectory);
  out << "localized " << records.size() << " scans, " << failures << " failures\n"
      << format_timing(compute_timing_stats(seconds)) << "\n";
}

void run_eval(const EvalFlags& f, std::ostream& out) {
  const auto estimate = load_trajectory(f.estimate);
  const auto truth = load_trajectory(f.truth);
  out << format_report(evaluate_trajectory(estimate, truth));
}

void run_export(const ExportFlags& f, std::ostream& out) {
  export_image(load_map(f.map), f.out);
  out << "wrote " << f.out << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("2D signed-distance-field SLAM and localization toolkit", "sdfslam");
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate a scan log from a scenario");
  auto* scenario_opt = simulate->add_option("--scenario", sim.scenario, "Scenario file");
  simulate->add_option("--builtin", sim.builtin, "Built-in scenario (rectangle)")
      ->excludes(scenario_opt);
  simulate->add_option("--out", sim.out, "Output scan log")->required();
  simulate->add_option("--gt-out", sim.gt_out, "Output ground-truth trajectory");
  simulate->add_option("--seed", sim.seed, "Override the scenario noise seed");
  simulate->add_option("--noise-sigma", sim.noise_sigma, "Override the range noise sigma");
  simulate->add_option("--outlier-rate", sim.outlier_rate, "Override the outlier rate")
      ->check(CLI::Range(0.0, 1.0));

  SlamFlags slam;
  auto* slam_cmd = app.add_subcommand("slam", "Build submaps and a merged map from a scan log");
  slam_cmd->add_option("--log", slam.log, "Input scan log")->required();
  slam_cmd->add_option("--map", slam.map, "Output merged map file")->required();
  slam_cmd->add_option("--trajectory", slam.trajectory, "Output trajectory")->required();
  slam_cmd->add_option("--submaps", slam.submaps, "Output submap set directory");
  slam_cmd->add_option("--resolution", slam.submap_options.resolution, "Cell size in meters")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  slam_cmd->add_option("--truncation", slam.submap_options.truncation, "Truncation in meters")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  slam_cmd->add_option("--w-max", slam.submap_options.w_max, "Weight cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  slam_cmd->add_option("--max-expansions", slam.max_expansions,
                       "Neighbor rings searched for fit points [default: by resolution]")
      ->check(CLI::Range(0, 100));
  slam_cmd->add_option("--submap-scans", slam.submap_options.scans_per_submap,
                       "Scans per submap")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  slam_cmd->add_option("--submap-size", slam.submap_options.size, "Submap side length in meters")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  slam_cmd->add_option("--iters1", slam.iters1, "Stage-1 iteration cap")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  slam_cmd->add_option("--iters2", slam.iters2, "Stage-2 iteration cap")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  slam.match.add_to(*slam_cmd);

  MergeFlags merge;
  auto* merge_cmd = app.add_subcommand("merge", "Merge a submap set into one map");
  merge_cmd->add_option("--submaps", merge.submaps, "Submap set directory")->required();
  merge_cmd->add_option("--out", merge.out, "Output map file")->required();

  LocalizeFlags loc;
  auto* localize = app.add_subcommand("localize", "Localize a scan log against a fixed map");
  localize->add_option("--map", loc.map, "Map file")->required();
  localize->add_option("--log", loc.log, "Input scan log")->required();
  localize->add_option("--out", loc.out, "Output trajectory");
  localize->add_option("--init", loc.init, "Initial pose x y theta [default: first ground truth]")
      ->expected(3);
  localize->add_option("--loc-iters", loc.iterations, "Iteration cap per stage")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  loc.match.add_to(*localize);

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compare a trajectory with ground truth");
  eval_cmd->add_option("--estimate", eval.estimate, "Estimated trajectory")->required();
  eval_cmd->add_option("--truth", eval.truth, "Ground-truth trajectory")->required();

  ExportFlags exp;
  auto* export_cmd = app.add_subcommand("export", "Render a map file as a PGM image");
  export_cmd->add_option("--map", exp.map, "Map file")->required();
  export_cmd->add_option("--out", exp.out, "Output image")->required();

  std::vector<const char*> argv{"sdfslam"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (simulate->parsed() && sim.scenario.empty() && sim.builtin.empty()) {
      throw CLI::ValidationError("simulate needs --scenario or --builtin");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (simulate->parsed()) run_simulate(sim, out);
    if (slam_cmd->parsed()) run_slam_command(slam, out);
    if (merge_cmd->parsed()) run_merge(merge, out);
    if (localize->parsed()) run_localize(loc, out);
    if (eval_cmd->parsed()) run_eval(eval, out);
    if (export_cmd->parsed()) run_export(exp, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sdfslam
