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

#ifndef SDFSLAM_CORE_GRID_GEOMETRY_HPP
#define SDFSLAM_CORE_GRID_GEOMETRY_HPP

#include <compare>
#include <cstddef>

#include "sdfslam/core/pose2.hpp"

namespace sdfslam {

// (col, row) with (0, 0) at the grid's minimum corner.
struct CellIndex {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

// Placement of a dense grid in the plane. `origin` is the world position of
// the center of cell (0, 0); cell (c, r) is centered at
// origin + resolution * (c, r).
class GridGeometry {
 public:
  GridGeometry(const Point2& origin, double resolution, int width, int height);

  const Point2& origin() const { return origin_; }
  double resolution() const { return resolution_; }
  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  Point2 cell_to_world(const CellIndex& cell) const;
  // Cell whose center is nearest to p; may lie outside the grid.
  CellIndex world_to_cell(const Point2& p) const;
  // Continuous cell coordinates: cell centers sit at integer values.
  Point2 world_to_grid(const Point2& p) const {
    return (p - origin_) / resolution_;
  }

  bool contains(const CellIndex& cell) const {
    return cell.col >= 0 && cell.row >= 0 && cell.col < width_ &&
           cell.row < height_;
  }
  // Row-major linear index. Requires contains(cell).
  std::size_t linear_index(const CellIndex& cell) const {
    return static_cast<std::size_t>(cell.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(cell.col);
  }
  CellIndex from_linear(std::size_t index) const {
    return {static_cast<int>(index % static_cast<std::size_t>(width_)),
            static_cast<int>(index / static_cast<std::size_t>(width_))};
  }

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;

 private:
  Point2 origin_;
  double resolution_;
  int width_;
  int height_;
};

}  // namespace sdfslam

#endif  // SDFSLAM_CORE_GRID_GEOMETRY_HPP
