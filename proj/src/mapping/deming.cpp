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

#include "sdfslam/mapping/deming.hpp"

#include <cmath>

#include "sdfslam/core/error.hpp"

namespace sdfslam {

RegressionLine fit_deming(std::span<const Point2> points, const Point2& laser_origin) {
  constexpr double kCoincident = 1e-9;
  if (points.size() < 2) {
    throw DegenerateFit("line fit needs at least two points");
  }

  Point2 centroid = Point2::Zero();
  for (const Point2& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  double spread = 0.0;
  for (const Point2& p : points) {
    const Point2 d = p - centroid;
    sxx += d.x() * d.x();
    syy += d.y() * d.y();
    sxy += d.x() * d.y();
    spread = std::max(spread, d.norm());
  }
  if (spread <= kCoincident) {
    throw DegenerateFit("all points coincide");
  }

  // Direction of largest scatter; the normal is perpendicular to it.
  const double direction = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  RegressionLine line;
  line.point = centroid;
  line.normal = Point2(-std::sin(direction), std::cos(direction));
  if (line.normal.dot(laser_origin - centroid) < 0.0) {
    line.normal = -line.normal;
  }
  return line;
}

}  // namespace sdfslam
