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

#ifndef SDFSLAM_SIM_WORLD_HPP
#define SDFSLAM_SIM_WORLD_HPP

#include <optional>
#include <span>
#include <vector>

#include "sdfslam/core/pose2.hpp"

namespace sdfslam {

struct Segment {
  Point2 a = Point2::Zero();
  Point2 b = Point2::Zero();

  double length() const { return (b - a).norm(); }
};

// A segment that is only present for scans first_scan..last_scan.
struct DynamicSegment {
  Segment segment;
  int first_scan = 0;
  int last_scan = 0;
};

class World {
 public:
  World() = default;
  // Throws Error on a degenerate (length <= 1e-9) or non-finite segment.
  explicit World(std::vector<Segment> static_segments,
                 std::vector<DynamicSegment> dynamic_segments = {});

  void add_static(const Segment& segment);
  void add_dynamic(const DynamicSegment& segment);
  // Axis-aligned box outline.
  void add_box(const Point2& lo, const Point2& hi);

  const std::vector<Segment>& static_segments() const { return static_; }
  const std::vector<DynamicSegment>& dynamic_segments() const { return dynamic_; }

  // Segments present while scan `scan_index` is taken.
  std::vector<Segment> segments_at(int scan_index) const;

 private:
  std::vector<Segment> static_;
  std::vector<DynamicSegment> dynamic_;
};

// Distance to the nearest segment hit at t > 0 along `direction` (unit), or
// nullopt if nothing is hit within range_max. Rays parallel to a segment
// never hit it.
std::optional<double> raycast(std::span<const Segment> segments, const Point2& origin,
                              const Point2& direction, double range_max);

// Shortest distance from p to the segment.
double distance_to_segment(const Segment& segment, const Point2& p);

}  // namespace sdfslam

#endif  // SDFSLAM_SIM_WORLD_HPP
