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

#include "sdfslam/core/laser_scan.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace sdfslam {
namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_pose(const std::optional<Pose2>& a, const std::optional<Pose2>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return same_bits(a->x(), b->x()) && same_bits(a->y(), b->y()) &&
         same_bits(a->theta(), b->theta());
}

}  // namespace

bool LaserScan::is_valid(std::size_t i) const {
  const double r = ranges[i];
  return std::isfinite(r) && r >= range_min && r <= range_max;
}

std::size_t LaserScan::valid_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (is_valid(i)) ++count;
  }
  return count;
}

bool LaserScan::operator==(const LaserScan& other) const {
  if (!same_bits(timestamp, other.timestamp) ||
      !same_bits(angle_min, other.angle_min) ||
      !same_bits(angle_increment, other.angle_increment) ||
      !same_bits(range_min, other.range_min) ||
      !same_bits(range_max, other.range_max) ||
      ranges.size() != other.ranges.size()) {
    return false;
  }
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (!same_bits(ranges[i], other.ranges[i])) return false;
  }
  return true;
}

std::vector<Beam> valid_beams(const LaserScan& scan) {
  std::vector<Beam> beams;
  beams.reserve(scan.ranges.size());
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    if (!scan.is_valid(i)) continue;
    const double angle = scan.beam_angle(i);
    const double r = scan.ranges[i];
    beams.push_back({i, r, angle, Point2(r * std::cos(angle), r * std::sin(angle))});
  }
  return beams;
}

std::vector<Point2> scan_to_points(const LaserScan& scan) {
  std::vector<Point2> points;
  points.reserve(scan.ranges.size());
  for (const Beam& beam : valid_beams(scan)) {
    points.push_back(beam.point);
  }
  return points;
}

bool ScanLogRecord::operator==(const ScanLogRecord& other) const {
  return scan == other.scan && same_pose(ground_truth, other.ground_truth) &&
         same_pose(odometry, other.odometry);
}

}  // namespace sdfslam
