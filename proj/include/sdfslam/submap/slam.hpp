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

#ifndef SDFSLAM_SUBMAP_SLAM_HPP
#define SDFSLAM_SUBMAP_SLAM_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "sdfslam/submap/submap.hpp"

namespace sdfslam {

struct SlamOptions {
  SubmapOptions submaps;
  MatchConfig match;

  // Matching thresholds tied to the submap truncation and weight cap.
  static SlamOptions defaults_for(const SubmapOptions& submaps);
};

// Scan-to-submap tracking front end. Each scan is matched against the
// older unfinished submap, starting from the odometry increment when
// odometry is available and from a constant-velocity prediction otherwise,
// and then inserted into the submap window.
class SlamFrontend {
 public:
  explicit SlamFrontend(const SlamOptions& options, const Pose2& initial_pose = Pose2());

  TimedPose add_scan(const LaserScan& scan, const std::optional<Pose2>& odometry = std::nullopt);
  void finish() { submaps_.finish_all(); }

  const std::vector<TimedPose>& trajectory() const { return trajectory_; }
  const SubmapCollection& submaps() const { return submaps_; }
  // Scans whose match failed and that kept the predicted pose.
  std::size_t match_failures() const { return match_failures_; }
  const std::vector<MatchResult>& match_results() const { return match_results_; }

 private:
  SlamOptions options_;
  Pose2 initial_pose_;
  SubmapCollection submaps_;
  std::vector<TimedPose> trajectory_;
  std::vector<MatchResult> match_results_;
  std::optional<Pose2> last_odometry_;
  std::size_t match_failures_ = 0;
};

struct SlamResult {
  std::vector<TimedPose> trajectory;
  std::deque<Submap> submaps;
  std::size_t match_failures = 0;
};

SlamResult run_slam(std::span<const ScanLogRecord> records, const SlamOptions& options,
                    const Pose2& initial_pose = Pose2());

}  // namespace sdfslam

#endif  // SDFSLAM_SUBMAP_SLAM_HPP
