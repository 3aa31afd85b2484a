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

#include "sdfslam/sim/world.hpp"

#include <algorithm>
#include <cmath>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

void validate(const Segment& segment) {
  if (!segment.a.allFinite() || !segment.b.allFinite() || !(segment.length() > 1e-9)) {
    throw Error("world segments must be finite with positive length");
  }
}

double cross(const Point2& u, const Point2& v) { return u.x() * v.y() - u.y() * v.x(); }

}  // namespace

World::World(std::vector<Segment> static_segments, std::vector<DynamicSegment> dynamic_segments)
    : static_(std::move(static_segments)), dynamic_(std::move(dynamic_segments)) {
  for (const Segment& s : static_) validate(s);
  for (const DynamicSegment& s : dynamic_) validate(s.segment);
}

void World::add_static(const Segment& segment) {
  validate(segment);
  static_.push_back(segment);
}

void World::add_dynamic(const DynamicSegment& segment) {
  validate(segment.segment);
  dynamic_.push_back(segment);
}

void World::add_box(const Point2& lo, const Point2& hi) {
  add_static({lo, Point2(hi.x(), lo.y())});
  add_static({Point2(hi.x(), lo.y()), hi});
  add_static({hi, Point2(lo.x(), hi.y())});
  add_static({Point2(lo.x(), hi.y()), lo});
}

std::vector<Segment> World::segments_at(int scan_index) const {
  std::vector<Segment> segments = static_;
  for (const DynamicSegment& d : dynamic_) {
    if (scan_index >= d.first_scan && scan_index <= d.last_scan) {
      segments.push_back(d.segment);
    }
  }
  return segments;
}

std::optional<double> raycast(std::span<const Segment> segments, const Point2& origin,
                              const Point2& direction, double range_max) {
  std::optional<double> nearest;
  for (const Segment& segment : segments) {
    const Point2 edge = segment.b - segment.a;
    const double denom = cross(direction, edge);
    if (denom == 0.0) continue;
    const Point2 offset = segment.a - origin;
    const double t = cross(offset, edge) / denom;
    const double s = cross(offset, direction) / denom;
    if (t <= 0.0 || s < 0.0 || s > 1.0 || t > range_max) continue;
    if (!nearest || t < *nearest) nearest = t;
  }
  return nearest;
}

double distance_to_segment(const Segment& segment, const Point2& p) {
  const Point2 edge = segment.b - segment.a;
  const double t = std::clamp((p - segment.a).dot(edge) / edge.squaredNorm(), 0.0, 1.0);
  return (segment.a + t * edge - p).norm();
}

}  // namespace sdfslam
