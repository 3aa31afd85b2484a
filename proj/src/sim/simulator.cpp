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

#include "sdfslam/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdfslam/core/error.hpp"
#include "sdfslam/sim/pcg.hpp"

namespace sdfslam {
namespace {

bool is_jump(double a, double b, double threshold) {
  const bool fa = std::isfinite(a);
  const bool fb = std::isfinite(b);
  if (fa != fb) return true;
  if (!fa) return false;
  return std::abs(a - b) > threshold;
}

std::vector<bool> discontinuity_mask(const std::vector<double>& ranges, double threshold) {
  const std::size_t n = ranges.size();
  std::vector<bool> mask(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(ranges[i])) continue;
    mask[i] = (i > 0 && is_jump(ranges[i], ranges[i - 1], threshold)) ||
              (i + 1 < n && is_jump(ranges[i], ranges[i + 1], threshold));
  }
  return mask;
}

}  // namespace

std::size_t SimulatedScan::outlier_count() const {
  return static_cast<std::size_t>(std::count(outlier.begin(), outlier.end(), true));
}

std::vector<double> true_ranges(std::span<const Segment> segments, const Pose2& pose,
                                const SensorModel& model) {
  std::vector<double> ranges(static_cast<std::size_t>(model.beam_count));
  const Point2 origin = pose.translation();
  for (int i = 0; i < model.beam_count; ++i) {
    const double angle = pose.theta() + model.angle_min() + i * model.angle_increment();
    const Point2 direction(std::cos(angle), std::sin(angle));
    const auto hit = raycast(segments, origin, direction, model.range_max);
    ranges[static_cast<std::size_t>(i)] =
        hit ? *hit : std::numeric_limits<double>::infinity();
  }
  return ranges;
}

SimulatedScan simulate_scan(const World& world, const Pose2& pose, const SensorModel& model,
                            int scan_index) {
  const std::vector<Segment> segments = world.segments_at(scan_index);
  SimulatedScan sim;
  sim.true_ranges = true_ranges(segments, pose, model);
  sim.near_discontinuity = discontinuity_mask(sim.true_ranges, model.discontinuity_jump);

  const std::size_t n = sim.true_ranges.size();
  sim.outlier.assign(n, false);
  sim.scan.angle_min = model.angle_min();
  sim.scan.angle_increment = model.angle_increment();
  sim.scan.range_min = model.range_min;
  sim.scan.range_max = model.range_max;
  sim.scan.ranges.resize(n);

  Pcg32 rng(model.seed, static_cast<std::uint64_t>(scan_index));
  for (std::size_t i = 0; i < n; ++i) {
    // Fixed number of draws per beam keeps beams independent of branching.
    const double noise = rng.gaussian();
    const double trial = rng.uniform();
    const double depth = rng.uniform();

    const double truth = sim.true_ranges[i];
    if (!std::isfinite(truth)) {
      sim.scan.ranges[i] = std::numeric_limits<double>::infinity();
      continue;
    }
    double reading = truth + model.noise_sigma * noise;
    const double probability = std::min(
        1.0, model.outlier_rate * (sim.near_discontinuity[i] ? model.discontinuity_boost : 1.0));
    if (trial < probability && truth > model.range_min) {
      reading = model.range_min + depth * (truth - model.range_min);
      sim.outlier[i] = true;
    }
    sim.scan.ranges[i] = reading;
  }
  return sim;
}

double outlier_rate_for_target(const World& world, std::span<const Pose2> poses,
                               const SensorModel& model, double target) {
  std::size_t finite = 0;
  std::size_t boosted = 0;
  for (std::size_t k = 0; k < poses.size(); ++k) {
    const auto segments = world.segments_at(static_cast<int>(k));
    const auto ranges = true_ranges(segments, poses[k], model);
    const auto mask = discontinuity_mask(ranges, model.discontinuity_jump);
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      if (!std::isfinite(ranges[i]) || ranges[i] <= model.range_min) continue;
      ++finite;
      if (mask[i]) ++boosted;
    }
  }
  if (finite == 0) return 0.0;
  const double f = static_cast<double>(boosted) / static_cast<double>(finite);
  return std::clamp(target / (1.0 - f + model.discontinuity_boost * f), 0.0, 1.0);
}

TrajectoryScript::TrajectoryScript(std::vector<Waypoint> waypoints)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.empty()) throw Error("trajectory script needs at least one waypoint");
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    if (!(waypoints_[i].t > waypoints_[i - 1].t)) {
      throw Error("trajectory timestamps must strictly increase");
    }
  }
}

Pose2 TrajectoryScript::at(double t) const {
  if (t <= waypoints_.front().t) return waypoints_.front().pose;
  if (t >= waypoints_.back().t) return waypoints_.back().pose;
  const auto next = std::upper_bound(waypoints_.begin(), waypoints_.end(), t,
                                     [](double value, const Waypoint& w) { return value < w.t; });
  const Waypoint& b = *next;
  const Waypoint& a = *(next - 1);
  const double s = (t - a.t) / (b.t - a.t);
  const Point2 position = a.pose.translation() + s * (b.pose.translation() - a.pose.translation());
  return Pose2(position, a.pose.theta() + s * angle_difference(b.pose.theta(), a.pose.theta()));
}

std::vector<ScanLogRecord> run_scenario(const World& world, const TrajectoryScript& script,
                                        const SensorModel& model, double rate_hz) {
  if (!(rate_hz > 0.0)) throw Error("scan rate must be positive");
  const double duration = script.end_time() - script.start_time();
  const auto count = static_cast<std::size_t>(std::floor(duration * rate_hz + 1e-9)) + 1;
  std::vector<ScanLogRecord> records;
  records.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = script.start_time() + static_cast<double>(k) / rate_hz;
    const Pose2 pose = script.at(t);
    ScanLogRecord record;
    record.scan = simulate_scan(world, pose, model, static_cast<int>(k)).scan;
    record.scan.timestamp = t;
    record.ground_truth = pose;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace sdfslam
