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

#ifndef SDFSLAM_IO_MAP_FILE_HPP
#define SDFSLAM_IO_MAP_FILE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sdfslam/mapping/sdf_grid.hpp"

namespace sdfslam {

// Binary map layout, all little-endian:
//
//   char[4]  magic "SDF2"
//   u32      version (1)
//   f64      origin x, origin y, resolution
//   u64      width, height
//   f64      truncation, w_max
//   f32[w*h] signed distance, row-major
//   f32[w*h] weight, row-major
inline constexpr std::uint32_t kMapFileVersion = 1;

std::vector<std::uint8_t> encode_map(const SdfGrid& grid);
// Throws FormatError on a bad magic, short or oversized buffer or invalid
// header, VersionError on an unsupported version.
SdfGrid decode_map(std::span<const std::uint8_t> bytes);

void save_map(const SdfGrid& grid, const std::string& path);
SdfGrid load_map(const std::string& path);

}  // namespace sdfslam

#endif  // SDFSLAM_IO_MAP_FILE_HPP
