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

#ifndef SDFSLAM_MAPPING_SDF_MAP_HPP
#define SDFSLAM_MAPPING_SDF_MAP_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sdfslam/core/laser_scan.hpp"
#include "sdfslam/mapping/deming.hpp"
#include "sdfslam/mapping/sdf_grid.hpp"

namespace sdfslam {

// How many Chebyshev rings around a sparsely hit cell may be searched for
// extra points before the cell is given up.
struct ExpansionPolicy {
  int max_expansions = 3;

  // 1 for 10-20cm cells, 3 for 5cm or finer, 2 in between.
  static ExpansionPolicy for_resolution(double resolution);
};

// Candidate update of one cell within a single frame. Smaller priority wins.
struct UpdateEntry {
  std::size_t cell = 0;  // linear index
  double sdf = 0.0;
  double weight = 1.0;
  double priority = 0.0;
};

// Free-space entries rank below every surface entry.
inline constexpr double kFreeSpacePriority = std::numeric_limits<double>::infinity();

// Beams further than this from the fitted line normal do not carve.
inline constexpr double kFreeSpaceAngleLimit = 80.0 * kPi / 180.0;

// Hit points of one frame grouped by the cell containing them.
class HitBuckets {
 public:
  HitBuckets(const GridGeometry& geometry, std::span<const Point2> world_points);

  std::span<const Point2> points_in(const CellIndex& cell) const;
  // Occupied cells in ascending linear-index order.
  const std::vector<CellIndex>& occupied_cells() const { return occupied_; }

 private:
  GridGeometry geometry_;
  std::unordered_map<std::size_t, std::vector<Point2>> buckets_;
  std::vector<CellIndex> occupied_;
};

struct CollectedPoints {
  std::vector<Point2> points;
  int expansions = 0;
};

// Starts with the cell's own points and adds whole Chebyshev rings (8 cells,
// then 16, ...) while fewer than three points are known and the policy
// allows another expansion. Returns nullopt (skip) if fewer than two points
// are found.
std::optional<CollectedPoints> collect_points(const CellIndex& cell,
                                              const HitBuckets& hits,
                                              const ExpansionPolicy& policy);

// Closed axis-aligned box.
struct UpdateBox {
  Point2 min;
  Point2 max;

  bool contains(const Point2& p) const {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() && p.y() <= max.y();
  }
};

// Box centered on the causing cell with half-width (1 + 0.5 e) r.
UpdateBox update_range(const Point2& cell_center, int expansions, double resolution);

// Surface updates caused by one hit cell: every cell whose center is closer
// than the truncation distance to the causing cell and whose projection on
// the line falls inside update_range receives its clamped signed distance to
// the line, positive on the sensor side.
std::vector<UpdateEntry> surface_update_entries(const CellIndex& cell,
                                                const RegressionLine& line,
                                                int expansions, const SdfGrid& grid,
                                                const Point2& laser_origin);

// Carving extent along a beam of length `beam_range` that meets a surface
// at incidence `gamma` (angle between the line normal and the beam):
// max(0, beam_range - t_d / cos(gamma)). nullopt when |gamma| exceeds
// kFreeSpaceAngleLimit.
std::optional<double> free_space_extent(double beam_range, double gamma, double t_d);

struct FreeSpaceRay {
  Point2 direction = Point2::UnitX();  // unit, world frame
  double extent = 0.0;
};

// Cells crossed by the rays from `origin`, keeping those whose center
// projects onto the ray within [0, extent]. Each gets +truncation.
std::vector<UpdateEntry> free_space_entries(const SdfGrid& grid, const Point2& origin,
                                            std::span<const FreeSpaceRay> rays);

// One entry per cell: the smallest priority wins; entries tied at that
// priority are averaged. Output is sorted by cell and does not depend on
// input order.
std::vector<UpdateEntry> resolve_update_set(std::vector<UpdateEntry> entries);

struct UpdateStats {
  std::size_t hit_cells = 0;
  std::size_t skipped_cells = 0;
  std::size_t cells_touched = 0;
  std::size_t surface_cells = 0;
  std::size_t carved_cells = 0;
};

// Integrates one scan taken at `pose` (grid frame) into the grid. Throws
// OutOfBounds, leaving the grid untouched, if a hit point lies outside it.
UpdateStats integrate_scan(SdfGrid& grid, const LaserScan& scan, const Pose2& pose,
                           const ExpansionPolicy& policy);

}  // namespace sdfslam

#endif  // SDFSLAM_MAPPING_SDF_MAP_HPP
