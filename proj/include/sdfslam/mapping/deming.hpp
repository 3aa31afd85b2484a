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

#ifndef SDFSLAM_MAPPING_DEMING_HPP
#define SDFSLAM_MAPPING_DEMING_HPP

#include <span>

#include "sdfslam/core/pose2.hpp"

namespace sdfslam {

// Line through `point` with unit `normal`. The normal faces the sensor that
// produced the fitted points.
struct RegressionLine {
  Point2 point = Point2::Zero();
  Point2 normal = Point2::UnitY();

  // Positive on the normal (sensor) side.
  double signed_distance(const Point2& p) const { return normal.dot(p - point); }
  Point2 project(const Point2& p) const { return p - signed_distance(p) * normal; }
};

// Deming regression with unit error-variance ratio, i.e. the total least
// squares line minimizing orthogonal squared distances. Vertical lines are
// handled like any other orientation.
//
// Throws DegenerateFit if fewer than two distinct points are given.
RegressionLine fit_deming(std::span<const Point2> points, const Point2& laser_origin);

}  // namespace sdfslam

#endif  // SDFSLAM_MAPPING_DEMING_HPP
