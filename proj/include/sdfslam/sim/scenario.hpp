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

#ifndef SDFSLAM_SIM_SCENARIO_HPP
#define SDFSLAM_SIM_SCENARIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sdfslam/sim/simulator.hpp"

namespace sdfslam {

struct Scenario {
  World world;
  std::vector<Waypoint> waypoints;
  SensorModel model;
  double rate_hz = 10.0;

  TrajectoryScript script() const { return TrajectoryScript(waypoints); }
};

// Plain-text key = value scenario description, '#' starts a comment.
//
//   seed = 7                      beams = 271
//   fov_deg = 270                 range_min = 0.05
//   range_max = 10                noise_sigma = 0.005
//   outlier_rate = 0.0            rate_hz = 10
//   segment = x0 y0 x1 y1         box = x0 y0 x1 y1
//   dynamic = x0 y0 x1 y1 first_scan last_scan
//   waypoint = t x y theta
//   ellipse = cx cy a b period samples
//
// `ellipse` appends `samples` waypoints spaced period/samples apart along a
// counter-clockwise ellipse, heading tangent to the path.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);
void write_scenario(std::ostream& out, const Scenario& scenario);

// Waypoints along a counter-clockwise ellipse starting at (cx + a, cy).
std::vector<Waypoint> ellipse_waypoints(const Point2& center, double a, double b, double period,
                                        int samples, double t0 = 0.0);

// 10m x 8m room with two box obstacles and a 400-scan elliptic circuit at
// 10 Hz, 271-beam sensor with 5mm range noise.
Scenario rectangle_room_scenario();

}  // namespace sdfslam

#endif  // SDFSLAM_SIM_SCENARIO_HPP
