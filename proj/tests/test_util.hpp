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

#ifndef SDFSLAM_TESTS_TEST_UTIL_HPP
#define SDFSLAM_TESTS_TEST_UTIL_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sdfslam/core/pose2.hpp"
#include "sdfslam/mapping/sdf_map.hpp"
#include "sdfslam/sim/pcg.hpp"
#include "sdfslam/sim/scenario.hpp"

namespace sdfslam::testing {

// Homogeneous matrix of a pose, built independently of Pose2's arithmetic.
inline Eigen::Matrix3d pose_matrix(const Pose2& p) {
  Eigen::Matrix3d m;
  m << std::cos(p.theta()), -std::sin(p.theta()), p.x(),  //
      std::sin(p.theta()), std::cos(p.theta()), p.y(),    //
      0.0, 0.0, 1.0;
  return m;
}

inline Pose2 random_pose(Pcg32& rng, double extent = 10.0) {
  return Pose2(rng.uniform(-extent, extent), rng.uniform(-extent, extent),
               rng.uniform(-kPi, kPi));
}

// Grid of the given size with every cell filled with random known values.
inline SdfGrid random_grid(Pcg32& rng, int width, int height, double resolution,
                           double truncation = 0.06, double w_max = 10.0) {
  SdfGrid grid(GridGeometry(Point2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)), resolution,
                            width, height),
               truncation, w_max);
  for (SdfCell& c : grid.mutable_cells()) {
    c.sdf = static_cast<float>(rng.uniform(-truncation, truncation));
    c.weight = static_cast<float>(rng.uniform(0.5, w_max));
  }
  return grid;
}

// Map of the fixture room built by integrating noise-free scans at the true
// poses of the first `scans` fixture frames.
inline SdfGrid ground_truth_room_map(int scans = 400, double resolution = 0.05) {
  const Scenario scenario = rectangle_room_scenario();
  SensorModel model = scenario.model;
  model.noise_sigma = 0.0;
  const auto records = run_scenario(scenario.world, scenario.script(), model, scenario.rate_hz);
  const int width = static_cast<int>(std::lround(11.0 / resolution));
  const int height = static_cast<int>(std::lround(9.0 / resolution));
  SdfGrid grid(GridGeometry(Point2(-0.5, -0.5), resolution, width, height), 0.06, 10.0);
  const ExpansionPolicy policy = ExpansionPolicy::for_resolution(resolution);
  for (int i = 0; i < scans && i < static_cast<int>(records.size()); ++i) {
    integrate_scan(grid, records[static_cast<std::size_t>(i)].scan,
                   *records[static_cast<std::size_t>(i)].ground_truth, policy);
  }
  return grid;
}

// Exact truncated signed distance to the fixture room's walls: positive in
// free space, negative inside obstacles and beyond the outer walls. Every
// cell is known with weight w_max.
inline SdfGrid analytic_room_map(double resolution = 0.05, double truncation = 0.06,
                                 double w_max = 10.0) {
  const Scenario scenario = rectangle_room_scenario();
  const auto& segments = scenario.world.static_segments();
  const int width = static_cast<int>(std::lround(11.0 / resolution));
  const int height = static_cast<int>(std::lround(9.0 / resolution));
  SdfGrid grid(GridGeometry(Point2(-0.5, -0.5), resolution, width, height), truncation, w_max);
  auto inside_box = [](const Point2& p, double x0, double y0, double x1, double y1) {
    return p.x() > x0 && p.x() < x1 && p.y() > y0 && p.y() < y1;
  };
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      const Point2 p = grid.geometry().cell_to_world({col, row});
      double d = std::numeric_limits<double>::infinity();
      for (const Segment& s : segments) d = std::min(d, distance_to_segment(s, p));
      const bool occupied = !inside_box(p, 0.0, 0.0, 10.0, 8.0) ||
                            inside_box(p, 3.6, 3.5, 4.4, 4.5) ||
                            inside_box(p, 5.8, 3.4, 6.4, 4.4);
      const double sdf = std::min(d, truncation) * (occupied ? -1.0 : 1.0);
      grid.mutable_cell({col, row}) = {static_cast<float>(sdf), static_cast<float>(w_max)};
    }
  }
  return grid;
}

}  // namespace sdfslam::testing

#endif  // SDFSLAM_TESTS_TEST_UTIL_HPP
