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

#include "sdfslam/io/scan_log.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

class Tokenizer {
 public:
  Tokenizer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string_view next(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(line_, std::string("missing ") + what);
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(begin, pos_ - begin);
  }

  double number(const char* what) {
    const std::string_view token = next(what);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
  }

  Pose2 pose(const char* what) {
    const double x = number(what);
    const double y = number(what);
    const double theta = number(what);
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(theta)) {
      throw ParseError(line_, std::string("non-finite ") + what);
    }
    return Pose2(x, y, theta);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

void append_pose(std::string& out, const char* tag, const Pose2& pose) {
  out += ' ';
  out += tag;
  out += ' ' + format_double(pose.x()) + ' ' + format_double(pose.y()) + ' ' +
         format_double(pose.theta());
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string format_scan_record(const ScanLogRecord& record) {
  const LaserScan& scan = record.scan;
  std::string out = format_double(scan.timestamp) + ' ' + format_double(scan.angle_min) + ' ' +
                    format_double(scan.angle_increment) + ' ' + format_double(scan.range_min) +
                    ' ' + format_double(scan.range_max) + ' ' +
                    std::to_string(scan.ranges.size());
  for (double r : scan.ranges) {
    out += ' ';
    out += format_double(r);
  }
  if (record.ground_truth) append_pose(out, "gt", *record.ground_truth);
  if (record.odometry) append_pose(out, "odom", *record.odometry);
  return out;
}

void write_scan_log(std::ostream& out, std::span<const ScanLogRecord> records) {
  for (const ScanLogRecord& record : records) {
    out << format_scan_record(record) << '\n';
  }
}

std::vector<ScanLogRecord> parse_scan_log(std::istream& in) {
  std::vector<ScanLogRecord> records;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    Tokenizer tokens(text, line);
    if (tokens.done()) continue;

    ScanLogRecord record;
    LaserScan& scan = record.scan;
    scan.timestamp = tokens.number("timestamp");
    scan.angle_min = tokens.number("angle_min");
    scan.angle_increment = tokens.number("angle_increment");
    scan.range_min = tokens.number("range_min");
    scan.range_max = tokens.number("range_max");
    if (!std::isfinite(scan.timestamp) || !std::isfinite(scan.angle_min) ||
        !(scan.angle_increment > 0.0) || !std::isfinite(scan.angle_increment)) {
      throw ParseError(line, "invalid scan header");
    }

    const std::string_view count_token = tokens.next("range count");
    std::size_t count = 0;
    const auto [ptr, ec] =
        std::from_chars(count_token.data(), count_token.data() + count_token.size(), count);
    if (ec != std::errc() || ptr != count_token.data() + count_token.size()) {
      throw ParseError(line, "bad range count '" + std::string(count_token) + "'");
    }
    scan.ranges.reserve(count);
    for (std::size_t i = 0; i < count; ++i) scan.ranges.push_back(tokens.number("range"));

    if (!tokens.done()) {
      std::string_view tag = tokens.next("tag");
      if (tag == "gt") {
        record.ground_truth = tokens.pose("gt pose");
        tag = tokens.done() ? std::string_view() : tokens.next("tag");
      }
      if (tag == "odom") {
        record.odometry = tokens.pose("odom pose");
      } else if (!tag.empty()) {
        throw ParseError(line, "unexpected token '" + std::string(tag) + "'");
      }
      if (!tokens.done()) throw ParseError(line, "trailing data");
    }

    if (!records.empty() && scan.timestamp < records.back().scan.timestamp) {
      throw ParseError(line, "timestamp goes backwards");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ScanLogRecord> load_scan_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scan log " + path);
  return parse_scan_log(in);
}

void save_scan_log(const std::string& path, std::span<const ScanLogRecord> records) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scan log " + path);
  write_scan_log(out, records);
  if (!out) throw IoError("failed writing scan log " + path);
}

}  // namespace sdfslam
