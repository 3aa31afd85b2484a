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

#ifndef SDFSLAM_CORE_LASER_SCAN_HPP
#define SDFSLAM_CORE_LASER_SCAN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sdfslam/core/pose2.hpp"

namespace sdfslam {

// One revolution of range readings. Beam i points at
// angle_min + i * angle_increment in the sensor frame.
struct LaserScan {
  double timestamp = 0.0;
  double angle_min = 0.0;
  double angle_increment = 0.0;
  double range_min = 0.0;
  double range_max = 0.0;
  std::vector<double> ranges;

  double beam_angle(std::size_t i) const {
    return angle_min + static_cast<double>(i) * angle_increment;
  }

  // NaN, infinities and readings outside [range_min, range_max] are invalid.
  bool is_valid(std::size_t i) const;
  std::size_t valid_count() const;

  // Bitwise comparison, so NaN readings compare equal to themselves.
  bool operator==(const LaserScan& other) const;
};

// A valid reading together with its beam geometry.
struct Beam {
  std::size_t index = 0;
  double range = 0.0;
  double angle = 0.0;
  Point2 point = Point2::Zero();  // sensor frame
};

std::vector<Beam> valid_beams(const LaserScan& scan);

// One sensor-frame point per valid reading, in beam order.
std::vector<Point2> scan_to_points(const LaserScan& scan);

// A scan as it travels through the log: the reading plus optional
// ground-truth and odometry poses.
struct ScanLogRecord {
  LaserScan scan;
  std::optional<Pose2> ground_truth;
  std::optional<Pose2> odometry;

  double timestamp() const { return scan.timestamp; }

  bool operator==(const ScanLogRecord& other) const;
};

}  // namespace sdfslam

#endif  // SDFSLAM_CORE_LASER_SCAN_HPP
