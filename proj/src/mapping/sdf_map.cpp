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

#include "sdfslam/mapping/sdf_map.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

constexpr double kResolutionTolerance = 1e-12;

double offset_distance(int dc, int dr, double resolution) {
  return resolution * std::sqrt(static_cast<double>(dc * dc + dr * dr));
}

// Cells at Chebyshev distance exactly `ring` from `center`, row by row.
template <typename Visit>
void for_each_ring_cell(const CellIndex& center, int ring, Visit&& visit) {
  for (int dr = -ring; dr <= ring; ++dr) {
    for (int dc = -ring; dc <= ring; ++dc) {
      if (std::max(std::abs(dc), std::abs(dr)) != ring) continue;
      visit(CellIndex{center.col + dc, center.row + dr});
    }
  }
}

// Fitted line of the hit cell, or of its nearest fitted neighbor in the
// first ring when the cell itself was skipped.
const RegressionLine* line_for_beam(
    const CellIndex& hit_cell, const GridGeometry& geometry,
    const std::unordered_map<std::size_t, RegressionLine>& lines) {
  if (geometry.contains(hit_cell)) {
    const auto it = lines.find(geometry.linear_index(hit_cell));
    if (it != lines.end()) return &it->second;
  }
  const RegressionLine* best = nullptr;
  double best_distance = std::numeric_limits<double>::infinity();
  for_each_ring_cell(hit_cell, 1, [&](const CellIndex& neighbor) {
    if (!geometry.contains(neighbor)) return;
    const auto it = lines.find(geometry.linear_index(neighbor));
    if (it == lines.end()) return;
    const int dc = neighbor.col - hit_cell.col;
    const int dr = neighbor.row - hit_cell.row;
    const double d = static_cast<double>(dc * dc + dr * dr);
    if (d < best_distance) {
      best_distance = d;
      best = &it->second;
    }
  });
  return best;
}

}  // namespace

ExpansionPolicy ExpansionPolicy::for_resolution(double resolution) {
  if (resolution <= 0.05 + kResolutionTolerance) return {3};
  if (resolution < 0.10 - kResolutionTolerance) return {2};
  return {1};
}

HitBuckets::HitBuckets(const GridGeometry& geometry, std::span<const Point2> world_points)
    : geometry_(geometry) {
  for (const Point2& p : world_points) {
    const CellIndex cell = geometry_.world_to_cell(p);
    if (!geometry_.contains(cell)) continue;
    auto& bucket = buckets_[geometry_.linear_index(cell)];
    if (bucket.empty()) occupied_.push_back(cell);
    bucket.push_back(p);
  }
  std::sort(occupied_.begin(), occupied_.end(), [this](const CellIndex& a, const CellIndex& b) {
    return geometry_.linear_index(a) < geometry_.linear_index(b);
  });
}

std::span<const Point2> HitBuckets::points_in(const CellIndex& cell) const {
  if (!geometry_.contains(cell)) return {};
  const auto it = buckets_.find(geometry_.linear_index(cell));
  if (it == buckets_.end()) return {};
  return it->second;
}

std::optional<CollectedPoints> collect_points(const CellIndex& cell,
                                              const HitBuckets& hits,
                                              const ExpansionPolicy& policy) {
  CollectedPoints collected;
  const auto own = hits.points_in(cell);
  collected.points.assign(own.begin(), own.end());
  while (collected.points.size() < 3 && collected.expansions < policy.max_expansions) {
    ++collected.expansions;
    for_each_ring_cell(cell, collected.expansions, [&](const CellIndex& neighbor) {
      const auto more = hits.points_in(neighbor);
      collected.points.insert(collected.points.end(), more.begin(), more.end());
    });
  }
  if (collected.points.size() < 2) return std::nullopt;
  return collected;
}

UpdateBox update_range(const Point2& cell_center, int expansions, double resolution) {
  const double half_width = (1.0 + 0.5 * expansions) * resolution;
  const Point2 half(half_width, half_width);
  return {cell_center - half, cell_center + half};
}

std::vector<UpdateEntry> surface_update_entries(const CellIndex& cell,
                                                const RegressionLine& line,
                                                int expansions, const SdfGrid& grid,
                                                const Point2& laser_origin) {
  const GridGeometry& geometry = grid.geometry();
  const double resolution = geometry.resolution();
  const double truncation = grid.truncation();

  RegressionLine oriented = line;
  if (oriented.normal.dot(laser_origin - oriented.point) < 0.0) {
    oriented.normal = -oriented.normal;
  }

  const Point2 center = geometry.cell_to_world(cell);
  const UpdateBox box = update_range(center, expansions, resolution);
  const int reach = static_cast<int>(std::ceil(truncation / resolution));

  std::vector<UpdateEntry> entries;
  for (int dr = -reach; dr <= reach; ++dr) {
    for (int dc = -reach; dc <= reach; ++dc) {
      const double distance = offset_distance(dc, dr, resolution);
      if (!(distance < truncation)) continue;
      const CellIndex candidate{cell.col + dc, cell.row + dr};
      if (!geometry.contains(candidate)) continue;
      const Point2 q = geometry.cell_to_world(candidate);
      if (!box.contains(oriented.project(q))) continue;
      const double sdf = std::clamp(oriented.signed_distance(q), -truncation, truncation);
      entries.push_back({geometry.linear_index(candidate), sdf, 1.0, distance});
    }
  }
  return entries;
}

std::optional<double> free_space_extent(double beam_range, double gamma, double t_d) {
  if (!(std::abs(gamma) <= kFreeSpaceAngleLimit)) return std::nullopt;
  return std::max(0.0, beam_range - t_d / std::cos(gamma));
}

std::vector<UpdateEntry> free_space_entries(const SdfGrid& grid, const Point2& origin,
                                            std::span<const FreeSpaceRay> rays) {
  const GridGeometry& geometry = grid.geometry();
  const double truncation = grid.truncation();
  const Point2 start = geometry.world_to_grid(origin);
  const CellIndex start_cell = geometry.world_to_cell(origin);

  std::vector<UpdateEntry> entries;
  for (const FreeSpaceRay& ray : rays) {
    if (!(ray.extent > 0.0)) continue;
    const double length = ray.extent / geometry.resolution();
    const Point2& d = ray.direction;

    // Grid traversal; cell k spans [k - 0.5, k + 0.5) in grid units.
    CellIndex cell = start_cell;
    const int step_x = d.x() > 0.0 ? 1 : -1;
    const int step_y = d.y() > 0.0 ? 1 : -1;
    const double inf = std::numeric_limits<double>::infinity();
    double next_x = d.x() != 0.0 ? (cell.col + 0.5 * step_x - start.x()) / d.x() : inf;
    double next_y = d.y() != 0.0 ? (cell.row + 0.5 * step_y - start.y()) / d.y() : inf;
    const double delta_x = d.x() != 0.0 ? 1.0 / std::abs(d.x()) : inf;
    const double delta_y = d.y() != 0.0 ? 1.0 / std::abs(d.y()) : inf;

    while (true) {
      if (geometry.contains(cell)) {
        const Point2 offset(cell.col - start.x(), cell.row - start.y());
        const double along = offset.dot(d);
        if (along >= 0.0 && along <= length) {
          entries.push_back(
              {geometry.linear_index(cell), truncation, 1.0, kFreeSpacePriority});
        }
      }
      if (next_x < next_y) {
        if (next_x > length) break;
        cell.col += step_x;
        next_x += delta_x;
      } else {
        if (next_y > length) break;
        cell.row += step_y;
        next_y += delta_y;
      }
    }
  }
  return entries;
}

std::vector<UpdateEntry> resolve_update_set(std::vector<UpdateEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const UpdateEntry& a, const UpdateEntry& b) {
    return std::tie(a.cell, a.priority, a.sdf) < std::tie(b.cell, b.priority, b.sdf);
  });

  std::vector<UpdateEntry> resolved;
  std::size_t i = 0;
  while (i < entries.size()) {
    const UpdateEntry& best = entries[i];
    double sum = 0.0;
    std::size_t tied = 0;
    std::size_t j = i;
    for (; j < entries.size() && entries[j].cell == best.cell; ++j) {
      if (entries[j].priority == best.priority) {
        sum += entries[j].sdf;
        ++tied;
      }
    }
    resolved.push_back({best.cell, sum / static_cast<double>(tied), 1.0, best.priority});
    i = j;
  }
  return resolved;
}

UpdateStats integrate_scan(SdfGrid& grid, const LaserScan& scan, const Pose2& pose,
                           const ExpansionPolicy& policy) {
  UpdateStats stats;
  const GridGeometry& geometry = grid.geometry();
  const std::vector<Beam> beams = valid_beams(scan);
  if (beams.empty()) return stats;

  const Point2 origin = pose.translation();
  std::vector<Point2> world_points;
  world_points.reserve(beams.size());
  for (const Beam& beam : beams) {
    const Point2 p = transform_point(pose, beam.point);
    if (!geometry.contains(geometry.world_to_cell(p))) {
      throw OutOfBounds("hit point (" + std::to_string(p.x()) + ", " +
                        std::to_string(p.y()) + ") lies outside the grid");
    }
    world_points.push_back(p);
  }

  const HitBuckets hits(geometry, world_points);
  std::vector<UpdateEntry> entries;
  std::unordered_map<std::size_t, RegressionLine> lines;
  for (const CellIndex& cell : hits.occupied_cells()) {
    ++stats.hit_cells;
    const auto collected = collect_points(cell, hits, policy);
    if (!collected) {
      ++stats.skipped_cells;
      continue;
    }
    RegressionLine line;
    try {
      line = fit_deming(collected->points, origin);
    } catch (const DegenerateFit&) {
      ++stats.skipped_cells;
      continue;
    }
    lines.emplace(geometry.linear_index(cell), line);
    auto cell_entries =
        surface_update_entries(cell, line, collected->expansions, grid, origin);
    entries.insert(entries.end(), cell_entries.begin(), cell_entries.end());
  }

  std::vector<FreeSpaceRay> rays;
  rays.reserve(beams.size());
  for (std::size_t i = 0; i < beams.size(); ++i) {
    const RegressionLine* line =
        line_for_beam(geometry.world_to_cell(world_points[i]), geometry, lines);
    if (line == nullptr) continue;
    const Point2 direction = (world_points[i] - origin) / beams[i].range;
    const double gamma = std::acos(std::min(1.0, std::abs(line->normal.dot(direction))));
    const auto extent = free_space_extent(beams[i].range, gamma, grid.truncation());
    if (!extent) continue;
    rays.push_back({direction, *extent});
  }
  const auto free_entries = free_space_entries(grid, origin, rays);
  entries.insert(entries.end(), free_entries.begin(), free_entries.end());

  const auto resolved = resolve_update_set(std::move(entries));
  for (const UpdateEntry& entry : resolved) {
    SdfCell& cell = grid.mutable_at(entry.cell);
    cell = fuse_cell(cell, entry.sdf, entry.weight, grid.w_max());
    if (entry.priority == kFreeSpacePriority) {
      ++stats.carved_cells;
    } else {
      ++stats.surface_cells;
    }
  }
  stats.cells_touched = resolved.size();
  return stats;
}

}  // namespace sdfslam
