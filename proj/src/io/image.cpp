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

#include "sdfslam/io/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "sdfslam/core/error.hpp"

namespace sdfslam {

std::uint8_t sdf_to_gray(const SdfCell& cell, double truncation) {
  if (cell.weight <= 0.0f) return 255;
  const double scaled = (static_cast<double>(cell.sdf) + truncation) / (2.0 * truncation) * 255.0;
  return static_cast<std::uint8_t>(std::clamp(std::floor(scaled + 0.5), 0.0, 255.0));
}

GrayImage render_image(const SdfGrid& grid) {
  const GridGeometry& g = grid.geometry();
  GrayImage image;
  image.width = g.width();
  image.height = g.height();
  image.pixels.resize(g.cell_count());
  for (int row = 0; row < g.height(); ++row) {
    const int y = g.height() - 1 - row;
    for (int col = 0; col < g.width(); ++col) {
      image.pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(g.width()) +
                   static_cast<std::size_t>(col)] =
          sdf_to_gray(grid.cell({col, row}), grid.truncation());
    }
  }
  return image;
}

void write_pgm(const GrayImage& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image " + path);
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw IoError("failed writing image " + path);
}

void export_image(const SdfGrid& grid, const std::string& path) {
  write_pgm(render_image(grid), path);
}

}  // namespace sdfslam
