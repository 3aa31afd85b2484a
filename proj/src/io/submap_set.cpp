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

#include "sdfslam/io/submap_set.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdfslam/core/error.hpp"
#include "sdfslam/io/map_file.hpp"
#include "sdfslam/io/scan_log.hpp"

namespace sdfslam {
namespace {

constexpr const char* kIndexName = "submaps.txt";

}  // namespace

void save_submap_set(std::span<const Submap> submaps, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw IoError("cannot create directory " + directory + ": " + ec.message());

  std::ofstream index(fs::path(directory) / kIndexName);
  if (!index) throw IoError("cannot write submap index in " + directory);
  for (const Submap& s : submaps) {
    const std::string file = "submap_" + std::to_string(s.id) + ".sdf2";
    save_map(s.grid, (fs::path(directory) / file).string());
    index << s.id << ' ' << format_double(s.pose.x()) << ' ' << format_double(s.pose.y()) << ' '
          << format_double(s.pose.theta()) << ' ' << s.scan_count << ' ' << file << '\n';
  }
  if (!index) throw IoError("failed writing submap index in " + directory);
}

std::vector<Submap> load_submap_set(const std::string& directory) {
  namespace fs = std::filesystem;
  std::ifstream index(fs::path(directory) / kIndexName);
  if (!index) throw IoError("cannot open submap index in " + directory);

  std::vector<Submap> submaps;
  std::string text;
  std::size_t line = 0;
  while (std::getline(index, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(text);
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    int scan_count = 0;
    std::string file;
    std::string extra;
    if (!(fields >> id >> x >> y >> theta >> scan_count >> file) || (fields >> extra)) {
      throw ParseError(line, "expected 'id x y theta scan_count file'");
    }
    if (fs::path(file).has_parent_path()) throw ParseError(line, "submap file must be local");
    submaps.push_back(Submap{load_map((fs::path(directory) / file).string()), Pose2(x, y, theta),
                             id, scan_count, true});
  }
  return submaps;
}

}  // namespace sdfslam
