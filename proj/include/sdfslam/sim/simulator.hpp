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

#ifndef SDFSLAM_SIM_SIMULATOR_HPP
#define SDFSLAM_SIM_SIMULATOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sdfslam/core/laser_scan.hpp"
#include "sdfslam/sim/world.hpp"

namespace sdfslam {

// Defaults follow a TiM5xx-class scanner: 271 beams over 270 degrees.
struct SensorModel {
  int beam_count = 271;
  double fov = 270.0 * kPi / 180.0;
  double range_min = 0.05;
  double range_max = 10.0;
  double noise_sigma = 0.005;
  double outlier_rate = 0.0;
  // Beams next to a range jump larger than this get boosted outlier odds.
  double discontinuity_jump = 0.5;
  double discontinuity_boost = 5.0;
  std::uint64_t seed = 1;

  double angle_min() const { return -0.5 * fov; }
  double angle_increment() const { return beam_count > 1 ? fov / (beam_count - 1) : 0.0; }
};

struct SimulatedScan {
  LaserScan scan;
  // Noise-free ranges; +inf where the beam misses.
  std::vector<double> true_ranges;
  std::vector<bool> outlier;
  std::vector<bool> near_discontinuity;

  std::size_t outlier_count() const;
};

// Raycasts every beam, adds Gaussian range noise and replaces a beam with a
// premature return drawn uniformly in [range_min, true range] with
// probability outlier_rate (times discontinuity_boost next to a depth jump).
// The generator is seeded from (model.seed, scan_index). Misses read +inf.
SimulatedScan simulate_scan(const World& world, const Pose2& pose, const SensorModel& model,
                            int scan_index);

// Noise-free ranges for one pose.
std::vector<double> true_ranges(std::span<const Segment> segments, const Pose2& pose,
                                const SensorModel& model);

// Per-beam outlier probability that yields `target` outliers overall across
// the given poses, given the discontinuity boost.
double outlier_rate_for_target(const World& world, std::span<const Pose2> poses,
                               const SensorModel& model, double target);

struct Waypoint {
  double t = 0.0;
  Pose2 pose;
};

// Piecewise-linear path: linear in position, shortest arc in heading.
class TrajectoryScript {
 public:
  // Throws Error unless timestamps strictly increase.
  explicit TrajectoryScript(std::vector<Waypoint> waypoints);

  Pose2 at(double t) const;
  double start_time() const { return waypoints_.front().t; }
  double end_time() const { return waypoints_.back().t; }
  const std::vector<Waypoint>& waypoints() const { return waypoints_; }

 private:
  std::vector<Waypoint> waypoints_;
};

// Samples the script at `rate_hz` from its start through its end and
// simulates one scan per sample; each record carries its true pose.
std::vector<ScanLogRecord> run_scenario(const World& world, const TrajectoryScript& script,
                                        const SensorModel& model, double rate_hz);

}  // namespace sdfslam

#endif  // SDFSLAM_SIM_SIMULATOR_HPP
