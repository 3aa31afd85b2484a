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

#ifndef SDFSLAM_IO_IMAGE_HPP
#define SDFSLAM_IO_IMAGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdfslam/mapping/sdf_grid.hpp"

namespace sdfslam {

// 8-bit grayscale rendering, one pixel per cell. Signed distance maps
// linearly from [-truncation, +truncation] to [0, 255] with half-up rounding;
// unknown cells are white. Pixel rows run from the top of the map (highest
// grid row) downwards.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

std::uint8_t sdf_to_gray(const SdfCell& cell, double truncation);
GrayImage render_image(const SdfGrid& grid);

// Writes a binary PGM (P5). Throws IoError.
void write_pgm(const GrayImage& image, const std::string& path);
void export_image(const SdfGrid& grid, const std::string& path);

}  // namespace sdfslam

#endif  // SDFSLAM_IO_IMAGE_HPP
