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

#include "sdfslam/submap/slam.hpp"

#include "sdfslam/core/error.hpp"

namespace sdfslam {

SlamOptions SlamOptions::defaults_for(const SubmapOptions& submaps) {
  SlamOptions options;
  options.submaps = submaps;
  options.match.trim_threshold = submaps.truncation;
  options.match.huber_delta = submaps.w_max * submaps.truncation / 3.0;
  return options;
}

SlamFrontend::SlamFrontend(const SlamOptions& options, const Pose2& initial_pose)
    : options_(options), initial_pose_(initial_pose), submaps_(options.submaps) {}

TimedPose SlamFrontend::add_scan(const LaserScan& scan, const std::optional<Pose2>& odometry) {
  Pose2 pose = initial_pose_;
  if (!trajectory_.empty()) {
    Pose2 predicted;
    if (odometry && last_odometry_) {
      predicted = compose(trajectory_.back().pose,
                          compose(inverse(*last_odometry_), *odometry));
    } else {
      const std::size_t n = trajectory_.size();
      const std::span<const TimedPose> recent(trajectory_.data() + (n >= 2 ? n - 2 : 0),
                                              n >= 2 ? 2 : 1);
      predicted = predict_pose(recent, scan.timestamp);
    }
    pose = predicted;

    const Submap* target = submaps_.matching_target();
    try {
      const MatchResult result = match_two_stage(
          target->grid, scan, compose(inverse(target->pose), predicted), options_.match);
      pose = compose(target->pose, result.pose);
      match_results_.push_back(result);
    } catch (const SingularHessian&) {
      ++match_failures_;
    } catch (const TooFewPoints&) {
      ++match_failures_;
    }
  }
  last_odometry_ = odometry;
  submaps_.insert(scan, pose);
  trajectory_.push_back({scan.timestamp, pose});
  return trajectory_.back();
}

SlamResult run_slam(std::span<const ScanLogRecord> records, const SlamOptions& options,
                    const Pose2& initial_pose) {
  SlamFrontend frontend(options, initial_pose);
  for (const ScanLogRecord& record : records) {
    frontend.add_scan(record.scan, record.odometry);
  }
  frontend.finish();
  return {frontend.trajectory(), frontend.submaps().submaps(), frontend.match_failures()};
}

}  // namespace sdfslam
