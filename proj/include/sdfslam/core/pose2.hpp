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

#ifndef SDFSLAM_CORE_POSE2_HPP
#define SDFSLAM_CORE_POSE2_HPP

#include <Eigen/Core>

namespace sdfslam {

using Point2 = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;

// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

// Planar rigid transform taking sensor-frame points into the map frame.
// The heading is kept normalized to (-pi, pi] by every constructor and
// operation, so the fields are read-only.
class Pose2 {
 public:
  Pose2() = default;
  Pose2(double x, double y, double theta)
      : x_(x), y_(y), theta_(normalize_angle(theta)) {}
  Pose2(const Point2& translation, double theta)
      : Pose2(translation.x(), translation.y(), theta) {}

  static Pose2 identity() { return Pose2(); }

  double x() const { return x_; }
  double y() const { return y_; }
  double theta() const { return theta_; }
  Point2 translation() const { return {x_, y_}; }

  friend bool operator==(const Pose2&, const Pose2&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double theta_ = 0.0;
};

// a∘b: first apply b, then a.
Pose2 compose(const Pose2& a, const Pose2& b);
Pose2 inverse(const Pose2& p);

// Rotates d by the heading and then translates it.
Point2 transform_point(const Pose2& p, const Point2& d);

inline Pose2 operator*(const Pose2& a, const Pose2& b) { return compose(a, b); }
inline Point2 operator*(const Pose2& p, const Point2& d) {
  return transform_point(p, d);
}

// Signed smallest difference a - b, in (-pi, pi].
inline double angle_difference(double a, double b) {
  return normalize_angle(a - b);
}

}  // namespace sdfslam

#endif  // SDFSLAM_CORE_POSE2_HPP
