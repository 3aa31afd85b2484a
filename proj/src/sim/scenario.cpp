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

#include "sdfslam/sim/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_numbers(const std::string& value, std::size_t expected,
                                  std::size_t line) {
  std::istringstream in(value);
  std::vector<double> numbers;
  std::string token;
  while (in >> token) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line, "not a number: '" + token + "'");
    }
    numbers.push_back(v);
  }
  if (numbers.size() != expected) {
    throw ParseError(line, "expected " + std::to_string(expected) + " values, got " +
                               std::to_string(numbers.size()));
  }
  return numbers;
}

std::string shortest(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

}  // namespace

std::vector<Waypoint> ellipse_waypoints(const Point2& center, double a, double b, double period,
                                        int samples, double t0) {
  std::vector<Waypoint> waypoints;
  waypoints.reserve(static_cast<std::size_t>(std::max(0, samples)));
  for (int k = 0; k < samples; ++k) {
    const double phase = 2.0 * kPi * k / samples;
    const Point2 position(center.x() + a * std::cos(phase), center.y() + b * std::sin(phase));
    const double heading = std::atan2(b * std::cos(phase), -a * std::sin(phase));
    waypoints.push_back({t0 + period * k / samples, Pose2(position, heading)});
  }
  return waypoints;
}

Scenario parse_scenario(std::istream& in) {
  Scenario scenario;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    auto one = [&] { return parse_numbers(value, 1, line)[0]; };

    if (key == "seed") {
      const double v = one();
      if (v < 0 || v != std::floor(v)) throw ParseError(line, "seed must be a non-negative integer");
      scenario.model.seed = static_cast<std::uint64_t>(v);
    } else if (key == "beams") {
      const double v = one();
      if (v < 1 || v != std::floor(v)) throw ParseError(line, "beams must be a positive integer");
      scenario.model.beam_count = static_cast<int>(v);
    } else if (key == "fov_deg") {
      scenario.model.fov = one() * kPi / 180.0;
    } else if (key == "range_min") {
      scenario.model.range_min = one();
    } else if (key == "range_max") {
      scenario.model.range_max = one();
    } else if (key == "noise_sigma") {
      scenario.model.noise_sigma = one();
    } else if (key == "outlier_rate") {
      const double v = one();
      if (v < 0.0 || v > 1.0) throw ParseError(line, "outlier_rate must lie in [0, 1]");
      scenario.model.outlier_rate = v;
    } else if (key == "rate_hz") {
      scenario.rate_hz = one();
      if (!(scenario.rate_hz > 0.0)) throw ParseError(line, "rate_hz must be positive");
    } else if (key == "segment" || key == "box") {
      const auto v = parse_numbers(value, 4, line);
      try {
        if (key == "segment") {
          scenario.world.add_static({Point2(v[0], v[1]), Point2(v[2], v[3])});
        } else {
          scenario.world.add_box(Point2(v[0], v[1]), Point2(v[2], v[3]));
        }
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "dynamic") {
      const auto v = parse_numbers(value, 6, line);
      try {
        scenario.world.add_dynamic({{Point2(v[0], v[1]), Point2(v[2], v[3])},
                                    static_cast<int>(v[4]),
                                    static_cast<int>(v[5])});
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "waypoint") {
      const auto v = parse_numbers(value, 4, line);
      scenario.waypoints.push_back({v[0], Pose2(v[1], v[2], v[3])});
    } else if (key == "ellipse") {
      const auto v = parse_numbers(value, 6, line);
      const double t0 = scenario.waypoints.empty()
                            ? 0.0
                            : scenario.waypoints.back().t + v[4] / v[5];
      const auto more =
          ellipse_waypoints(Point2(v[0], v[1]), v[2], v[3], v[4], static_cast<int>(v[5]), t0);
      scenario.waypoints.insert(scenario.waypoints.end(), more.begin(), more.end());
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (scenario.waypoints.empty()) throw ParseError(line, "scenario has no waypoints");
  try {
    TrajectoryScript check(scenario.waypoints);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file " + path);
  return parse_scenario(in);
}

void write_scenario(std::ostream& out, const Scenario& scenario) {
  const SensorModel& m = scenario.model;
  out << "seed = " << m.seed << "\n"
      << "beams = " << m.beam_count << "\n"
      << "fov_deg = " << shortest(m.fov * 180.0 / kPi) << "\n"
      << "range_min = " << shortest(m.range_min) << "\n"
      << "range_max = " << shortest(m.range_max) << "\n"
      << "noise_sigma = " << shortest(m.noise_sigma) << "\n"
      << "outlier_rate = " << shortest(m.outlier_rate) << "\n"
      << "rate_hz = " << shortest(scenario.rate_hz) << "\n";
  for (const Segment& s : scenario.world.static_segments()) {
    out << "segment = " << shortest(s.a.x()) << ' ' << shortest(s.a.y()) << ' '
        << shortest(s.b.x()) << ' ' << shortest(s.b.y()) << "\n";
  }
  for (const DynamicSegment& d : scenario.world.dynamic_segments()) {
    out << "dynamic = " << shortest(d.segment.a.x()) << ' ' << shortest(d.segment.a.y()) << ' '
        << shortest(d.segment.b.x()) << ' ' << shortest(d.segment.b.y()) << ' '
        << d.first_scan << ' ' << d.last_scan << "\n";
  }
  for (const Waypoint& w : scenario.waypoints) {
    out << "waypoint = " << shortest(w.t) << ' ' << shortest(w.pose.x()) << ' '
        << shortest(w.pose.y()) << ' ' << shortest(w.pose.theta()) << "\n";
  }
}

Scenario rectangle_room_scenario() {
  Scenario scenario;
  scenario.world.add_box(Point2(0.0, 0.0), Point2(10.0, 8.0));
  scenario.world.add_box(Point2(3.6, 3.5), Point2(4.4, 4.5));
  scenario.world.add_box(Point2(5.8, 3.4), Point2(6.4, 4.4));
  scenario.waypoints = ellipse_waypoints(Point2(5.0, 4.0), 3.0, 2.0, 40.0, 400);
  scenario.model = SensorModel{};
  scenario.model.seed = 7;
  scenario.rate_hz = 10.0;
  return scenario;
}

}  // namespace sdfslam
