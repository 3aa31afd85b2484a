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

#ifndef SDFSLAM_IO_SCAN_LOG_HPP
#define SDFSLAM_IO_SCAN_LOG_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sdfslam/core/laser_scan.hpp"

namespace sdfslam {

// One record per line, whitespace separated:
//
//   timestamp angle_min angle_increment range_min range_max N r_1 ... r_N
//       [gt x y theta] [odom x y theta]
//
// Numbers are written in shortest round-trip form, so a write/parse cycle
// reproduces every field bit for bit. Misses are written as `inf`.
std::string format_scan_record(const ScanLogRecord& record);
void write_scan_log(std::ostream& out, std::span<const ScanLogRecord> records);

// Strict parse; blank lines are ignored. Throws ParseError with the 1-based
// line number on malformed input or out-of-order timestamps.
std::vector<ScanLogRecord> parse_scan_log(std::istream& in);

std::vector<ScanLogRecord> load_scan_log(const std::string& path);
void save_scan_log(const std::string& path, std::span<const ScanLogRecord> records);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace sdfslam

#endif  // SDFSLAM_IO_SCAN_LOG_HPP
