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

#ifndef SDFSLAM_SUBMAP_SUBMAP_HPP
#define SDFSLAM_SUBMAP_SUBMAP_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "sdfslam/core/laser_scan.hpp"
#include "sdfslam/mapping/sdf_map.hpp"
#include "sdfslam/matching/scan_match.hpp"

namespace sdfslam {

struct SubmapOptions {
  double resolution = 0.05;
  // Side length of the square submap grid in meters, centered on the
  // submap origin. Has to cover the sensor range.
  double size = 22.0;
  double truncation = 0.06;
  double w_max = 10.0;
  ExpansionPolicy policy = ExpansionPolicy::for_resolution(0.05);
  // Scans inserted into a submap before it is finished.
  int scans_per_submap = 50;
};

struct Submap {
  SdfGrid grid;
  Pose2 pose;  // submap frame -> global frame
  int id = 0;
  int scan_count = 0;
  bool finished = false;
};

// Square grid centered at the submap frame origin.
SdfGrid make_submap_grid(const SubmapOptions& options);

// Cartographer-style window of at most two unfinished submaps. Every scan is
// inserted into all unfinished submaps; a submap is finished after
// scans_per_submap scans and a new one is opened, anchored at the current
// pose, whenever the newest has received half of that.
class SubmapCollection {
 public:
  explicit SubmapCollection(const SubmapOptions& options);

  // `pose` is the sensor pose in the global frame.
  void insert(const LaserScan& scan, const Pose2& pose);

  // Older unfinished submap, the one new scans are matched against.
  const Submap* matching_target() const;
  void finish_all();

  const std::deque<Submap>& submaps() const { return submaps_; }
  const SubmapOptions& options() const { return options_; }

 private:
  void open_submap(const Pose2& anchor);

  SubmapOptions options_;
  std::deque<Submap> submaps_;
};

// Bounding geometry covering every submap footprint in the global frame,
// padded by one cell. Throws MixedResolution.
GridGeometry merged_bounds(std::span<const Submap> submaps);

struct BicubicSample {
  double sdf = 0.0;
  double weight = 0.0;
};

// Catmull-Rom interpolation of F over the 4x4 neighborhood of p (grid
// frame), with bilinearly interpolated weight. The inner 2x2 support must be
// observed; missing outer samples are extrapolated linearly from the inner
// ones. The result is clamped to +-truncation.
std::optional<BicubicSample> sample_bicubic(const SdfGrid& grid, const Point2& p);

struct MergedMap {
  SdfGrid grid;
  std::vector<int> provenance;  // fused submap ids, in fusion order
};

// Resamples every submap into one global grid, in id order:
//   F = (W_m F_m + W_b F_b) / (W_m + W_b),  W = max(W_m, W_b).
MergedMap merge_submaps(std::span<const Submap> submaps);

// Two-stage match against the merged map with both stages capped at
// `iterations`. The map is never modified.
MatchResult pure_localize(const MergedMap& merged, const LaserScan& scan, const Pose2& init,
                          int iterations, const MatchConfig& base);

}  // namespace sdfslam

#endif  // SDFSLAM_SUBMAP_SUBMAP_HPP
