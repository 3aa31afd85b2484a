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

#ifndef SDFSLAM_IO_SUBMAP_SET_HPP
#define SDFSLAM_IO_SUBMAP_SET_HPP

#include <span>
#include <string>
#include <vector>

#include "sdfslam/submap/submap.hpp"

namespace sdfslam {

// A submap set is a directory holding `submaps.txt`, with one
// `id x y theta scan_count file` line per submap, and the referenced map
// files. Loaded submaps are marked finished.
void save_submap_set(std::span<const Submap> submaps, const std::string& directory);
std::vector<Submap> load_submap_set(const std::string& directory);

}  // namespace sdfslam

#endif  // SDFSLAM_IO_SUBMAP_SET_HPP
