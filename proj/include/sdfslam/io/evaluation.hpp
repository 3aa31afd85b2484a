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

#ifndef SDFSLAM_IO_EVALUATION_HPP
#define SDFSLAM_IO_EVALUATION_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdfslam/matching/scan_match.hpp"

namespace sdfslam {

struct TimingStats {
  double median = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double std = 0.0;  // population standard deviation
  std::size_t count = 0;
};

TimingStats compute_timing_stats(std::span<const double> seconds);

struct FrameError {
  double timestamp = 0.0;
  double translation = 0.0;  // meters
  double rotation = 0.0;     // radians, signed
};

struct EvalReport {
  double rmse_translation = 0.0;
  double rmse_rotation = 0.0;
  std::vector<FrameError> frames;
  std::optional<TimingStats> timing;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

inline bool operator==(const FrameError& a, const FrameError& b) {
  return a.timestamp == b.timestamp && a.translation == b.translation && a.rotation == b.rotation;
}
inline bool operator==(const TimingStats& a, const TimingStats& b) {
  return a.median == b.median && a.mean == b.mean && a.max == b.max && a.std == b.std &&
         a.count == b.count;
}

// Maps the estimate onto the ground truth through their first poses,
//   aligned_i = gt_0 * est_0^-1 * est_i,
// and accumulates errors over the frames after the shared first one.
// Throws LengthMismatch.
EvalReport evaluate_trajectory(std::span<const TimedPose> estimated,
                               std::span<const TimedPose> ground_truth);

// Trajectory text files: one `t x y theta` line per pose.
void write_trajectory(std::ostream& out, std::span<const TimedPose> trajectory);
std::vector<TimedPose> parse_trajectory(std::istream& in);
void save_trajectory(const std::string& path, std::span<const TimedPose> trajectory);
std::vector<TimedPose> load_trajectory(const std::string& path);

// Ground-truth poses carried by a scan log. Throws Error if a record lacks one.
std::vector<TimedPose> ground_truth_trajectory(std::span<const ScanLogRecord> records);

std::string format_timing(const TimingStats& stats);
std::string format_report(const EvalReport& report);

}  // namespace sdfslam

#endif  // SDFSLAM_IO_EVALUATION_HPP
