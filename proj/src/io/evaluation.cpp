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

#include "sdfslam/io/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdfslam/core/error.hpp"
#include "sdfslam/io/scan_log.hpp"

namespace sdfslam {
namespace {

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace

TimingStats compute_timing_stats(std::span<const double> seconds) {
  TimingStats stats;
  stats.count = seconds.size();
  if (seconds.empty()) return stats;
  std::vector<double> sorted(seconds.begin(), seconds.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  stats.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double sum = 0.0;
  for (double s : sorted) sum += s;
  stats.mean = sum / static_cast<double>(n);
  stats.max = sorted.back();
  double sq = 0.0;
  for (double s : sorted) sq += (s - stats.mean) * (s - stats.mean);
  stats.std = std::sqrt(sq / static_cast<double>(n));
  return stats;
}

EvalReport evaluate_trajectory(std::span<const TimedPose> estimated,
                               std::span<const TimedPose> ground_truth) {
  if (estimated.size() != ground_truth.size()) {
    throw LengthMismatch("trajectory lengths differ: " + std::to_string(estimated.size()) +
                         " vs " + std::to_string(ground_truth.size()));
  }
  EvalReport report;
  if (estimated.empty()) return report;

  const Pose2 alignment = ground_truth.front().pose * inverse(estimated.front().pose);
  double sum_t = 0.0;
  double sum_r = 0.0;
  for (std::size_t i = 1; i < estimated.size(); ++i) {
    const Pose2 aligned = alignment * estimated[i].pose;
    FrameError e;
    e.timestamp = ground_truth[i].timestamp;
    e.translation = (aligned.translation() - ground_truth[i].pose.translation()).norm();
    e.rotation = angle_difference(aligned.theta(), ground_truth[i].pose.theta());
    sum_t += e.translation * e.translation;
    sum_r += e.rotation * e.rotation;
    report.frames.push_back(e);
  }
  if (!report.frames.empty()) {
    const auto n = static_cast<double>(report.frames.size());
    report.rmse_translation = std::sqrt(sum_t / n);
    report.rmse_rotation = std::sqrt(sum_r / n);
  }
  return report;
}

void write_trajectory(std::ostream& out, std::span<const TimedPose> trajectory) {
  for (const TimedPose& p : trajectory) {
    out << format_double(p.timestamp) << ' ' << format_double(p.pose.x()) << ' '
        << format_double(p.pose.y()) << ' ' << format_double(p.pose.theta()) << '\n';
  }
}

std::vector<TimedPose> parse_trajectory(std::istream& in) {
  std::vector<TimedPose> trajectory;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(text);
    std::string token;
    std::vector<double> values;
    while (fields >> token) {
      double v = 0.0;
      const char* end = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(token.data(), end, v);
      if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ParseError(line, "bad number '" + token + "'");
      }
      values.push_back(v);
    }
    if (values.size() != 4) throw ParseError(line, "expected 't x y theta'");
    if (!trajectory.empty() && values[0] < trajectory.back().timestamp) {
      throw ParseError(line, "timestamp goes backwards");
    }
    trajectory.push_back({values[0], Pose2(values[1], values[2], values[3])});
  }
  return trajectory;
}

void save_trajectory(const std::string& path, std::span<const TimedPose> trajectory) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trajectory " + path);
  write_trajectory(out, trajectory);
  if (!out) throw IoError("failed writing trajectory " + path);
}

std::vector<TimedPose> load_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trajectory " + path);
  return parse_trajectory(in);
}

std::vector<TimedPose> ground_truth_trajectory(std::span<const ScanLogRecord> records) {
  std::vector<TimedPose> trajectory;
  trajectory.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].ground_truth) {
      throw Error("scan record " + std::to_string(i + 1) + " has no ground-truth pose");
    }
    trajectory.push_back({records[i].timestamp(), *records[i].ground_truth});
  }
  return trajectory;
}

std::string format_timing(const TimingStats& stats) {
  return "timing[s] median " + fixed(stats.median, 6) + " mean " + fixed(stats.mean, 6) +
         " max " + fixed(stats.max, 6) + " std " + fixed(stats.std, 6) + " (" +
         std::to_string(stats.count) + " frames)";
}

std::string format_report(const EvalReport& report) {
  std::string out = "frames " + std::to_string(report.frames.size()) + "\n" +
                    "rmse_translation " + format_double(report.rmse_translation) + " m\n" +
                    "rmse_rotation " + format_double(report.rmse_rotation) + " rad\n";
  if (report.timing) out += format_timing(*report.timing) + "\n";
  return out;
}

}  // namespace sdfslam
