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

#include "sdfslam/core/grid_geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

// floor() result saturated into int range so far-away points stay outside.
int saturating_floor(double value) {
  constexpr double kLimit = static_cast<double>(std::numeric_limits<int>::max() / 2);
  const double f = std::floor(value);
  if (!(f > -kLimit)) return -static_cast<int>(kLimit);
  if (f > kLimit) return static_cast<int>(kLimit);
  return static_cast<int>(f);
}

}  // namespace

GridGeometry::GridGeometry(const Point2& origin, double resolution, int width,
                           int height)
    : origin_(origin), resolution_(resolution), width_(width), height_(height) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw Error("grid resolution must be positive, got " + std::to_string(resolution));
  }
  if (width < 1 || height < 1) {
    throw Error("grid must have at least one cell");
  }
}

Point2 GridGeometry::cell_to_world(const CellIndex& cell) const {
  return {origin_.x() + resolution_ * cell.col, origin_.y() + resolution_ * cell.row};
}

CellIndex GridGeometry::world_to_cell(const Point2& p) const {
  const Point2 g = world_to_grid(p);
  return {saturating_floor(g.x() + 0.5), saturating_floor(g.y() + 0.5)};
}

}  // namespace sdfslam
