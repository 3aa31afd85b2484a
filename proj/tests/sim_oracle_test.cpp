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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sdfslam/core/error.hpp"
#include "sdfslam/sim/scenario.hpp"
#include "sdfslam/sim/simulator.hpp"
#include "sdfslam/sim/world.hpp"
#include "test_util.hpp"

namespace sdfslam {
namespace {

// ---------------------------------------------------------- Raycast

TEST(Raycast, PerpendicularWall) {
  const std::vector<Segment> wall{{Point2(2.0, -1.0), Point2(2.0, 1.0)}};
  const auto hit = raycast(wall, Point2::Zero(), Point2(1.0, 0.0), 10.0);
  ASSERT_TRUE(hit);
  EXPECT_NEAR(*hit, 2.0, 1e-12);
}

TEST(Raycast, ObliqueWall) {
  const std::vector<Segment> wall{{Point2(2.0, -5.0), Point2(2.0, 5.0)}};
  const double angle = kPi / 3.0;
  const auto hit = raycast(wall, Point2::Zero(), Point2(std::cos(angle), std::sin(angle)), 10.0);
  ASSERT_TRUE(hit);
  EXPECT_NEAR(*hit, 4.0, 1e-12);
}

TEST(Raycast, NearestOfSeveral) {
  const std::vector<Segment> walls{{Point2(5.0, -1.0), Point2(5.0, 1.0)},
                                   {Point2(3.0, -1.0), Point2(3.0, 1.0)},
                                   {Point2(-1.0, -1.0), Point2(-1.0, 1.0)}};
  const auto hit = raycast(walls, Point2::Zero(), Point2(1.0, 0.0), 10.0);
  ASSERT_TRUE(hit);
  EXPECT_NEAR(*hit, 3.0, 1e-12);
}

TEST(Raycast, MissesBeyondRangeBehindAndParallel) {
  const std::vector<Segment> far{{Point2(12.0, -1.0), Point2(12.0, 1.0)}};
  EXPECT_FALSE(raycast(far, Point2::Zero(), Point2(1.0, 0.0), 10.0));
  const std::vector<Segment> behind{{Point2(-2.0, -1.0), Point2(-2.0, 1.0)}};
  EXPECT_FALSE(raycast(behind, Point2::Zero(), Point2(1.0, 0.0), 10.0));
  const std::vector<Segment> parallel{{Point2(1.0, 0.0), Point2(3.0, 0.0)}};
  EXPECT_FALSE(raycast(parallel, Point2::Zero(), Point2(1.0, 0.0), 10.0));
  const std::vector<Segment> beside{{Point2(2.0, 0.5), Point2(2.0, 1.0)}};
  EXPECT_FALSE(raycast(beside, Point2::Zero(), Point2(1.0, 0.0), 10.0));
}

// Side of p relative to the line through the segment.
double side(const Segment& s, const Point2& p) {
  const Point2 d = s.b - s.a;
  const Point2 q = p - s.a;
  return d.x() * q.y() - d.y() * q.x();
}

// Marches along the ray in 0.1 mm steps and reports the first step at which
// the ray crosses a segment.
std::optional<double> march(const std::vector<Segment>& segments, const Point2& origin,
                            const Point2& direction, double range_max) {
  constexpr double kStep = 1e-4;
  const int steps = static_cast<int>(range_max / kStep);
  for (int k = 0; k < steps; ++k) {
    const Point2 p0 = origin + (k * kStep) * direction;
    const Point2 p1 = origin + ((k + 1) * kStep) * direction;
    for (const Segment& s : segments) {
      const double s0 = side(s, p0);
      const double s1 = side(s, p1);
      if (s0 == 0.0 && k == 0) continue;
      if ((s0 <= 0.0) == (s1 <= 0.0)) continue;
      const Point2 crossing = p0 + (s0 / (s0 - s1)) * (p1 - p0);
      const Point2 d = s.b - s.a;
      const double u = (crossing - s.a).dot(d) / d.squaredNorm();
      if (u >= 0.0 && u <= 1.0) return (k + 0.5) * kStep;
    }
  }
  return std::nullopt;
}

TEST(Raycast, AgreesWithRayMarching) {
  const Scenario scenario = rectangle_room_scenario();
  const auto& segments = scenario.world.static_segments();
  Pcg32 rng(41);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    // Random origins inside the room but outside the boxes.
    Point2 origin(rng.uniform(0.2, 9.8), rng.uniform(0.2, 7.8));
    if (origin.x() > 3.4 && origin.x() < 6.6 && origin.y() > 3.2 && origin.y() < 4.7) continue;
    const double angle = rng.uniform(-kPi, kPi);
    const Point2 direction(std::cos(angle), std::sin(angle));
    const auto expected = march(segments, origin, direction, 10.0);
    const auto actual = raycast(segments, origin, direction, 10.0);
    ASSERT_EQ(expected.has_value(), actual.has_value());
    if (expected) {
      EXPECT_NEAR(*actual, *expected, 1e-4);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(World, RejectsDegenerateSegments) {
  EXPECT_THROW(World({{Point2(1.0, 1.0), Point2(1.0, 1.0)}}), Error);
  EXPECT_THROW(World({{Point2(1.0, NAN), Point2(1.0, 1.0)}}), Error);
}

TEST(World, DynamicSegmentsFollowSchedule) {
  World world({{Point2(5.0, -1.0), Point2(5.0, 1.0)}});
  world.add_dynamic({{Point2(2.0, -1.0), Point2(2.0, 1.0)}, 3, 5});
  EXPECT_EQ(world.segments_at(2).size(), 1u);
  EXPECT_EQ(world.segments_at(3).size(), 2u);
  EXPECT_EQ(world.segments_at(5).size(), 2u);
  EXPECT_EQ(world.segments_at(6).size(), 1u);
  SensorModel model;
  model.noise_sigma = 0.0;
  const double mid = simulate_scan(world, Pose2(), model, 0).scan.ranges[135];
  const double blocked = simulate_scan(world, Pose2(), model, 4).scan.ranges[135];
  EXPECT_NEAR(mid, 5.0, 1e-12);
  EXPECT_NEAR(blocked, 2.0, 1e-12);
}

// ---------------------------------------------------------- Scans

TEST(SimulateScan, NoiseFreeEqualsRaycast) {
  const Scenario scenario = rectangle_room_scenario();
  SensorModel model = scenario.model;
  model.noise_sigma = 0.0;
  const Pose2 pose(2.0, 5.0, 0.3);
  const SimulatedScan sim = simulate_scan(scenario.world, pose, model, 3);
  ASSERT_EQ(sim.scan.ranges.size(), 271u);
  for (int i = 0; i < 271; ++i) {
    const double angle = pose.theta() + model.angle_min() + i * model.angle_increment();
    const auto hit = raycast(scenario.world.static_segments(), pose.translation(),
                             Point2(std::cos(angle), std::sin(angle)), model.range_max);
    ASSERT_TRUE(hit);
    EXPECT_EQ(sim.scan.ranges[static_cast<std::size_t>(i)], *hit);
  }
  EXPECT_EQ(sim.outlier_count(), 0u);
}

TEST(SimulateScan, BackProjectedPointsLieOnSegments) {
  const Scenario scenario = rectangle_room_scenario();
  SensorModel model = scenario.model;
  model.noise_sigma = 0.0;
  Pcg32 rng(42);
  for (int k = 0; k < 20; ++k) {
    const Pose2 pose(rng.uniform(1.0, 3.0), rng.uniform(1.0, 7.0), rng.uniform(-kPi, kPi));
    const LaserScan scan = simulate_scan(scenario.world, pose, model, k).scan;
    for (const Point2& local : scan_to_points(scan)) {
      const Point2 p = transform_point(pose, local);
      double nearest = std::numeric_limits<double>::infinity();
      for (const Segment& s : scenario.world.static_segments()) {
        nearest = std::min(nearest, distance_to_segment(s, p));
      }
      EXPECT_LT(nearest, 1e-9);
    }
  }
}

TEST(SimulateScan, SameSeedIsBitIdentical) {
  const Scenario scenario = rectangle_room_scenario();
  SensorModel model = scenario.model;
  model.outlier_rate = 0.1;
  const Pose2 pose(7.0, 2.0, -2.0);
  const SimulatedScan a = simulate_scan(scenario.world, pose, model, 11);
  const SimulatedScan b = simulate_scan(scenario.world, pose, model, 11);
  EXPECT_EQ(a.scan.ranges, b.scan.ranges);
  EXPECT_EQ(a.outlier, b.outlier);
  const SimulatedScan c = simulate_scan(scenario.world, pose, model, 12);
  EXPECT_NE(a.scan.ranges, c.scan.ranges);
  model.seed = 8;
  const SimulatedScan d = simulate_scan(scenario.world, pose, model, 11);
  EXPECT_NE(a.scan.ranges, d.scan.ranges);
}

TEST(SimulateScan, NoiseHasRequestedSpread) {
  const Scenario scenario = rectangle_room_scenario();
  const Pose2 pose(5.0, 1.5, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;
  for (int k = 0; k < 40; ++k) {
    const SimulatedScan sim = simulate_scan(scenario.world, pose, scenario.model, k);
    for (std::size_t i = 0; i < sim.scan.ranges.size(); ++i) {
      const double e = sim.scan.ranges[i] - sim.true_ranges[i];
      sum += e;
      sum_sq += e * e;
      ++n;
    }
  }
  const double mean = sum / static_cast<double>(n);
  const double sigma = std::sqrt(sum_sq / static_cast<double>(n) - mean * mean);
  EXPECT_NEAR(mean, 0.0, 3e-4);
  EXPECT_NEAR(sigma, 0.005, 2e-4);
}

TEST(SimulateScan, OutliersAreShortReturns) {
  const Scenario scenario = rectangle_room_scenario();
  SensorModel model = scenario.model;
  model.outlier_rate = 0.3;
  std::size_t outliers = 0;
  for (int k = 0; k < 20; ++k) {
    const Pose2 pose = scenario.script().at(k * 2.0);
    const SimulatedScan sim = simulate_scan(scenario.world, pose, model, k);
    for (std::size_t i = 0; i < sim.scan.ranges.size(); ++i) {
      if (!sim.outlier[i]) continue;
      ++outliers;
      EXPECT_GE(sim.scan.ranges[i], model.range_min);
      EXPECT_LE(sim.scan.ranges[i], sim.true_ranges[i]);
    }
  }
  EXPECT_GT(outliers, 0u);
}

TEST(SimulateScan, DiscontinuityMaskMarksDepthJumps) {
  // A box in front of a far wall creates two jumps; the enclosing room
  // keeps every other beam continuous.
  World world;
  world.add_box(Point2(-6.0, -6.0), Point2(6.0, 6.0));
  world.add_box(Point2(2.0, -0.3), Point2(2.5, 0.3));
  SensorModel model;
  model.noise_sigma = 0.0;
  const SimulatedScan sim = simulate_scan(world, Pose2(), model, 0);
  std::size_t marked = 0;
  for (std::size_t i = 0; i < sim.true_ranges.size(); ++i) {
    if (!sim.near_discontinuity[i]) continue;
    ++marked;
    const bool left = i > 0 && std::abs(sim.true_ranges[i] - sim.true_ranges[i - 1]) > 0.5;
    const bool right = i + 1 < sim.true_ranges.size() &&
                       std::abs(sim.true_ranges[i] - sim.true_ranges[i + 1]) > 0.5;
    EXPECT_TRUE(left || right);
  }
  EXPECT_EQ(marked, 4u);
}

TEST(OutlierCalibration, HitsTargetRate) {
  const Scenario scenario = rectangle_room_scenario();
  const auto script = scenario.script();
  std::vector<Pose2> poses;
  for (int k = 0; k < 100; ++k) poses.push_back(script.at(k * 0.4));
  SensorModel model = scenario.model;
  model.outlier_rate = outlier_rate_for_target(scenario.world, poses, model, 0.15);
  EXPECT_GT(model.outlier_rate, 0.0);
  EXPECT_LT(model.outlier_rate, 0.15);
  std::size_t total = 0;
  std::size_t outliers = 0;
  for (std::size_t k = 0; k < poses.size(); ++k) {
    const SimulatedScan sim = simulate_scan(scenario.world, poses[k], model, static_cast<int>(k));
    for (std::size_t i = 0; i < sim.true_ranges.size(); ++i) {
      if (std::isfinite(sim.true_ranges[i])) ++total;
    }
    outliers += sim.outlier_count();
  }
  const double rate = static_cast<double>(outliers) / static_cast<double>(total);
  EXPECT_NEAR(rate, 0.15, 0.03);
}

// ---------------------------------------------------------- Scripts

TEST(TrajectoryScript, InterpolatesLinearly) {
  const TrajectoryScript script({{0.0, Pose2(0.0, 0.0, 3.0)}, {2.0, Pose2(4.0, -2.0, -3.0)}});
  const Pose2 mid = script.at(1.0);
  EXPECT_NEAR(mid.x(), 2.0, 1e-12);
  EXPECT_NEAR(mid.y(), -1.0, 1e-12);
  // Shortest arc from 3 to -3 passes through pi.
  EXPECT_NEAR(std::abs(mid.theta()), kPi, 1e-12);
  EXPECT_EQ(script.at(-1.0), Pose2(0.0, 0.0, 3.0));
  EXPECT_EQ(script.at(5.0), Pose2(4.0, -2.0, -3.0));
}

TEST(TrajectoryScript, RejectsNonIncreasingTimes) {
  EXPECT_THROW(TrajectoryScript({}), Error);
  EXPECT_THROW(TrajectoryScript({{1.0, Pose2()}, {1.0, Pose2()}}), Error);
}

TEST(RunScenario, TwoWaypointPosesLieOnSegment) {
  const Scenario scenario = rectangle_room_scenario();
  const TrajectoryScript script({{0.0, Pose2(1.0, 1.0, 0.0)}, {3.0, Pose2(7.0, 2.5, 0.0)}});
  const auto records = run_scenario(scenario.world, script, scenario.model, 10.0);
  ASSERT_EQ(records.size(), 31u);
  const Point2 a(1.0, 1.0);
  const Point2 d = Point2(7.0, 2.5) - a;
  for (std::size_t k = 0; k < records.size(); ++k) {
    ASSERT_TRUE(records[k].ground_truth);
    const Point2 p = records[k].ground_truth->translation();
    const double cross = d.x() * (p - a).y() - d.y() * (p - a).x();
    EXPECT_NEAR(cross / d.norm(), 0.0, 1e-12);
    EXPECT_NEAR(records[k].scan.timestamp, 0.1 * static_cast<double>(k), 1e-12);
    EXPECT_NEAR((p - a).norm(), d.norm() * 0.1 * static_cast<double>(k) / 3.0, 1e-9);
  }
}

TEST(RunScenario, ZeroDurationGivesOneScan) {
  const Scenario scenario = rectangle_room_scenario();
  const TrajectoryScript script({{2.0, Pose2(1.0, 1.0, 0.0)}});
  const auto records = run_scenario(scenario.world, script, scenario.model, 10.0);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].scan.timestamp, 2.0);
}

TEST(RunScenario, FixtureCircuit) {
  const Scenario scenario = rectangle_room_scenario();
  const auto records = run_scenario(scenario.world, scenario.script(), scenario.model, 10.0);
  EXPECT_EQ(records.size(), 400u);
  // Every pose stays on the ellipse inside the free space.
  for (const auto& r : records) {
    const Point2 p = r.ground_truth->translation();
    const double e = std::pow((p.x() - 5.0) / 3.0, 2) + std::pow((p.y() - 4.0) / 2.0, 2);
    EXPECT_NEAR(e, 1.0, 0.01);
  }
}

// ---------------------------------------------------------- Scenario files

TEST(ScenarioFile, RoundTrip) {
  Scenario scenario = rectangle_room_scenario();
  scenario.world.add_dynamic({{Point2(1.0, 1.0), Point2(2.0, 1.5)}, 10, 20});
  scenario.model.outlier_rate = 0.125;
  std::stringstream buffer;
  write_scenario(buffer, scenario);
  const Scenario parsed = parse_scenario(buffer);
  EXPECT_EQ(parsed.model.seed, scenario.model.seed);
  EXPECT_EQ(parsed.model.beam_count, scenario.model.beam_count);
  EXPECT_DOUBLE_EQ(parsed.model.fov, scenario.model.fov);
  EXPECT_EQ(parsed.model.noise_sigma, scenario.model.noise_sigma);
  EXPECT_EQ(parsed.model.outlier_rate, scenario.model.outlier_rate);
  EXPECT_EQ(parsed.rate_hz, scenario.rate_hz);
  ASSERT_EQ(parsed.world.static_segments().size(), scenario.world.static_segments().size());
  for (std::size_t i = 0; i < parsed.world.static_segments().size(); ++i) {
    EXPECT_EQ(parsed.world.static_segments()[i].a, scenario.world.static_segments()[i].a);
    EXPECT_EQ(parsed.world.static_segments()[i].b, scenario.world.static_segments()[i].b);
  }
  ASSERT_EQ(parsed.world.dynamic_segments().size(), 1u);
  EXPECT_EQ(parsed.world.dynamic_segments()[0].first_scan, 10);
  EXPECT_EQ(parsed.world.dynamic_segments()[0].last_scan, 20);
  ASSERT_EQ(parsed.waypoints.size(), scenario.waypoints.size());
  for (std::size_t i = 0; i < parsed.waypoints.size(); ++i) {
    EXPECT_EQ(parsed.waypoints[i].t, scenario.waypoints[i].t);
    EXPECT_EQ(parsed.waypoints[i].pose, scenario.waypoints[i].pose);
  }
}

TEST(ScenarioFile, ParsesCommentsBoxesAndEllipses) {
  std::istringstream in(
      "# a small room\n"
      "seed = 3   # trailing comment\n"
      "box = 0 0 4 3\n"
      "waypoint = 0 1 1 0\n"
      "ellipse = 2 1.5 1 0.5 8 4\n");
  const Scenario s = parse_scenario(in);
  EXPECT_EQ(s.model.seed, 3u);
  EXPECT_EQ(s.world.static_segments().size(), 4u);
  ASSERT_EQ(s.waypoints.size(), 5u);
  EXPECT_DOUBLE_EQ(s.waypoints[1].t, 2.0);
  EXPECT_DOUBLE_EQ(s.waypoints[4].t, 8.0);
  EXPECT_NEAR(s.waypoints[1].pose.x(), 3.0, 1e-12);
  EXPECT_NEAR(s.waypoints[2].pose.y(), 2.0, 1e-12);
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_scenario(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ScenarioFile, ReportsErrorLines) {
  EXPECT_EQ(parse_error_line("seed = 1\nbogus = 3\n"), 2u);
  EXPECT_EQ(parse_error_line("seed = 1\n\nno equals sign\n"), 3u);
  EXPECT_EQ(parse_error_line("segment = 0 0 1\n"), 1u);
  EXPECT_EQ(parse_error_line("segment = 0 0 1 x\n"), 1u);
  EXPECT_EQ(parse_error_line("segment = 1 1 1 1\n"), 1u);
  EXPECT_EQ(parse_error_line("outlier_rate = 1.5\n"), 1u);
  EXPECT_EQ(parse_error_line("seed = -2\n"), 1u);
  EXPECT_EQ(parse_error_line("beams = 0\n"), 1u);
  EXPECT_NE(parse_error_line("seed = 1\n"), 0u);  // no waypoints
  EXPECT_NE(parse_error_line("waypoint = 1 0 0 0\nwaypoint = 1 1 0 0\n"), 0u);
  EXPECT_THROW(load_scenario("/nonexistent/scenario.txt"), IoError);
}

}  // namespace
}  // namespace sdfslam
