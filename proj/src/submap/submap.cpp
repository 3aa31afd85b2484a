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

#include "sdfslam/submap/submap.hpp"

#include <algorithm>
#include <cmath>

namespace sdfslam {

SdfGrid make_submap_grid(const SubmapOptions& options) {
  const int cells =
      std::max(1, static_cast<int>(std::ceil(options.size / options.resolution - 1e-9)));
  const double half = 0.5 * (cells - 1) * options.resolution;
  return SdfGrid(GridGeometry(Point2(-half, -half), options.resolution, cells, cells),
                 options.truncation, options.w_max);
}

SubmapCollection::SubmapCollection(const SubmapOptions& options) : options_(options) {}

void SubmapCollection::open_submap(const Pose2& anchor) {
  const int id = submaps_.empty() ? 0 : submaps_.back().id + 1;
  submaps_.push_back(Submap{make_submap_grid(options_), anchor, id, 0, false});
}

void SubmapCollection::insert(const LaserScan& scan, const Pose2& pose) {
  if (matching_target() == nullptr) open_submap(pose);

  for (Submap& submap : submaps_) {
    if (submap.finished) continue;
    integrate_scan(submap.grid, scan, compose(inverse(submap.pose), pose), options_.policy);
    ++submap.scan_count;
  }

  const int per_submap = std::max(1, options_.scans_per_submap);
  int unfinished = 0;
  for (Submap& submap : submaps_) {
    if (submap.finished) continue;
    if (unfinished == 0 && submap.scan_count >= per_submap) {
      submap.finished = true;
      continue;
    }
    ++unfinished;
  }
  const Submap& newest = submaps_.back();
  if (unfinished < 2 && (newest.finished || newest.scan_count >= std::max(1, per_submap / 2))) {
    open_submap(pose);
  }
}

const Submap* SubmapCollection::matching_target() const {
  for (const Submap& submap : submaps_) {
    if (!submap.finished) return &submap;
  }
  return nullptr;
}

void SubmapCollection::finish_all() {
  // Submaps opened but never filled carry no information.
  while (!submaps_.empty() && submaps_.back().scan_count == 0) submaps_.pop_back();
  for (Submap& submap : submaps_) submap.finished = true;
}

}  // namespace sdfslam
