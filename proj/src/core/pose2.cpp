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

#include "sdfslam/core/pose2.hpp"

#include <cmath>

namespace sdfslam {

double normalize_angle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  if (wrapped <= -kPi) {
    wrapped += 2.0 * kPi;
  }
  if (wrapped > kPi) {
    wrapped -= 2.0 * kPi;
  }
  return wrapped;
}

Pose2 compose(const Pose2& a, const Pose2& b) {
  const double c = std::cos(a.theta());
  const double s = std::sin(a.theta());
  return Pose2(a.x() + c * b.x() - s * b.y(), a.y() + s * b.x() + c * b.y(),
               a.theta() + b.theta());
}

Pose2 inverse(const Pose2& p) {
  const double c = std::cos(p.theta());
  const double s = std::sin(p.theta());
  return Pose2(-c * p.x() - s * p.y(), s * p.x() - c * p.y(), -p.theta());
}

Point2 transform_point(const Pose2& p, const Point2& d) {
  const double c = std::cos(p.theta());
  const double s = std::sin(p.theta());
  return {p.x() + c * d.x() - s * d.y(), p.y() + s * d.x() + c * d.y()};
}

}  // namespace sdfslam
