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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "sdfslam/core/error.hpp"
#include "sdfslam/submap/submap.hpp"

namespace sdfslam {
namespace {

std::array<Point2, 4> footprint_corners(const Submap& submap) {
  const GridGeometry& g = submap.grid.geometry();
  const double res = g.resolution();
  const Point2 lo = g.origin() - Point2(0.5 * res, 0.5 * res);
  const Point2 hi = g.origin() + Point2((g.width() - 0.5) * res, (g.height() - 0.5) * res);
  return {transform_point(submap.pose, lo), transform_point(submap.pose, Point2(hi.x(), lo.y())),
          transform_point(submap.pose, hi), transform_point(submap.pose, Point2(lo.x(), hi.y()))};
}

double catmull_rom(const std::array<double, 4>& p, double t) {
  return 0.5 * (2.0 * p[1] + (p[2] - p[0]) * t +
                (2.0 * p[0] - 5.0 * p[1] + 4.0 * p[2] - p[3]) * t * t +
                (3.0 * p[1] - p[0] - 3.0 * p[2] + p[3]) * t * t * t);
}

}  // namespace

GridGeometry merged_bounds(std::span<const Submap> submaps) {
  if (submaps.empty()) throw Error("merging needs at least one submap");
  const double res = submaps.front().grid.geometry().resolution();
  Point2 lo(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
  Point2 hi = -lo;
  for (const Submap& submap : submaps) {
    if (submap.grid.geometry().resolution() != res) {
      throw MixedResolution("submap " + std::to_string(submap.id) + " has resolution " +
                            std::to_string(submap.grid.geometry().resolution()) +
                            ", expected " + std::to_string(res));
    }
    for (const Point2& corner : footprint_corners(submap)) {
      lo = lo.cwiseMin(corner);
      hi = hi.cwiseMax(corner);
    }
  }
  lo -= Point2(res, res);
  hi += Point2(res, res);
  const int width = static_cast<int>(std::ceil((hi.x() - lo.x()) / res - 1e-9));
  const int height = static_cast<int>(std::ceil((hi.y() - lo.y()) / res - 1e-9));
  return GridGeometry(lo + Point2(0.5 * res, 0.5 * res), res, width, height);
}

std::optional<BicubicSample> sample_bicubic(const SdfGrid& grid, const Point2& p) {
  const GridGeometry& geometry = grid.geometry();
  const Point2 g = geometry.world_to_grid(p);
  if (!std::isfinite(g.x()) || !std::isfinite(g.y())) return std::nullopt;
  const double fc = std::floor(g.x());
  const double fr = std::floor(g.y());
  if (fc < 0.0 || fr < 0.0 || fc + 1.0 > geometry.width() - 1 ||
      fr + 1.0 > geometry.height() - 1) {
    return std::nullopt;
  }
  const int col = static_cast<int>(fc);
  const int row = static_cast<int>(fr);
  const double tx = g.x() - fc;
  const double ty = g.y() - fr;

  auto known = [&](int c, int r) {
    const CellIndex index{c, r};
    return geometry.contains(index) && grid.is_known(index);
  };
  for (int dr = 0; dr <= 1; ++dr) {
    for (int dc = 0; dc <= 1; ++dc) {
      if (!known(col + dc, row + dr)) return std::nullopt;
    }
  }
  auto sdf = [&](int c, int r) { return static_cast<double>(grid.cell({c, r}).sdf); };

  // Interpolate along x for each of the four rows; rows whose inner pair is
  // missing are extrapolated afterwards.
  std::array<double, 4> rows{};
  std::array<bool, 4> row_ok{};
  for (int k = 0; k < 4; ++k) {
    const int r = row - 1 + k;
    if (!known(col, r) || !known(col + 1, r)) continue;
    std::array<double, 4> s{};
    s[1] = sdf(col, r);
    s[2] = sdf(col + 1, r);
    s[0] = known(col - 1, r) ? sdf(col - 1, r) : 2.0 * s[1] - s[2];
    s[3] = known(col + 2, r) ? sdf(col + 2, r) : 2.0 * s[2] - s[1];
    rows[k] = catmull_rom(s, tx);
    row_ok[k] = true;
  }
  if (!row_ok[0]) rows[0] = 2.0 * rows[1] - rows[2];
  if (!row_ok[3]) rows[3] = 2.0 * rows[2] - rows[1];

  const double truncation = grid.truncation();
  BicubicSample sample;
  sample.sdf = std::clamp(catmull_rom(rows, ty), -truncation, truncation);
  auto weight = [&](int c, int r) { return static_cast<double>(grid.cell({c, r}).weight); };
  sample.weight = (1.0 - tx) * (1.0 - ty) * weight(col, row) + tx * (1.0 - ty) * weight(col + 1, row) +
                  (1.0 - tx) * ty * weight(col, row + 1) + tx * ty * weight(col + 1, row + 1);
  return sample;
}

MergedMap merge_submaps(std::span<const Submap> submaps) {
  const GridGeometry geometry = merged_bounds(submaps);
  const Submap& first = submaps.front();
  MergedMap merged{SdfGrid(geometry, first.grid.truncation(), first.grid.w_max()), {}};

  std::vector<const Submap*> ordered;
  for (const Submap& submap : submaps) ordered.push_back(&submap);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Submap* a, const Submap* b) { return a->id < b->id; });

  for (const Submap* submap : ordered) {
    Point2 lo(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
    Point2 hi = -lo;
    for (const Point2& corner : footprint_corners(*submap)) {
      lo = lo.cwiseMin(corner);
      hi = hi.cwiseMax(corner);
    }
    const CellIndex first_cell = geometry.world_to_cell(lo);
    const CellIndex last_cell = geometry.world_to_cell(hi);
    const int col_begin = std::max(0, first_cell.col);
    const int row_begin = std::max(0, first_cell.row);
    const int col_end = std::min(geometry.width() - 1, last_cell.col);
    const int row_end = std::min(geometry.height() - 1, last_cell.row);

    const Pose2 to_submap = inverse(submap->pose);
    for (int row = row_begin; row <= row_end; ++row) {
      for (int col = col_begin; col <= col_end; ++col) {
        const CellIndex index{col, row};
        const auto sample =
            sample_bicubic(submap->grid, transform_point(to_submap, geometry.cell_to_world(index)));
        if (!sample || !(sample->weight > 0.0)) continue;
        SdfCell& cell = merged.grid.mutable_cell(index);
        const double weight = cell.weight;
        if (weight > 0.0) {
          const double sdf = (weight * cell.sdf + sample->weight * sample->sdf) /
                             (weight + sample->weight);
          cell.sdf = static_cast<float>(sdf);
          cell.weight = static_cast<float>(std::max(weight, sample->weight));
        } else {
          cell.sdf = static_cast<float>(sample->sdf);
          cell.weight = static_cast<float>(sample->weight);
        }
      }
    }
    merged.provenance.push_back(submap->id);
  }
  return merged;
}

MatchResult pure_localize(const MergedMap& merged, const LaserScan& scan, const Pose2& init,
                          int iterations, const MatchConfig& base) {
  MatchConfig cfg = base;
  cfg.max_iters_stage1 = iterations;
  cfg.max_iters_stage2 = iterations;
  return match_two_stage(merged.grid, scan, init, cfg);
}

}  // namespace sdfslam
