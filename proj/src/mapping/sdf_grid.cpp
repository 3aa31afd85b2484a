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

#include "sdfslam/mapping/sdf_grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

void fnv_mix(std::uint64_t& hash, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    hash ^= (value >> (8 * i)) & 0xffu;
    hash *= 0x100000001b3ull;
  }
}

}  // namespace

SdfGrid::SdfGrid(const GridGeometry& geometry, double truncation, double w_max)
    : geometry_(geometry), truncation_(truncation), w_max_(w_max) {
  if (!(truncation > 0.0) || !std::isfinite(truncation)) {
    throw Error("truncation must be positive, got " + std::to_string(truncation));
  }
  if (!(w_max > 0.0) || !std::isfinite(w_max)) {
    throw Error("w_max must be positive, got " + std::to_string(w_max));
  }
  cells_.assign(geometry_.cell_count(), unknown_cell());
}

std::size_t SdfGrid::known_count() const {
  return static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](const SdfCell& c) { return c.weight > 0.0f; }));
}

std::uint64_t SdfGrid::checksum() const {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  fnv_mix(hash, std::bit_cast<std::uint64_t>(geometry_.origin().x()));
  fnv_mix(hash, std::bit_cast<std::uint64_t>(geometry_.origin().y()));
  fnv_mix(hash, std::bit_cast<std::uint64_t>(geometry_.resolution()));
  fnv_mix(hash, static_cast<std::uint64_t>(geometry_.width()));
  fnv_mix(hash, static_cast<std::uint64_t>(geometry_.height()));
  fnv_mix(hash, std::bit_cast<std::uint64_t>(truncation_));
  fnv_mix(hash, std::bit_cast<std::uint64_t>(w_max_));
  for (const SdfCell& c : cells_) {
    fnv_mix(hash, (static_cast<std::uint64_t>(std::bit_cast<std::uint32_t>(c.sdf)) << 32) |
                      std::bit_cast<std::uint32_t>(c.weight));
  }
  return hash;
}

SdfCell fuse_cell(const SdfCell& prev, double update_sdf, double update_weight,
                  double w_max) {
  const double prev_weight = prev.weight;
  if (prev_weight <= 0.0) {
    return {static_cast<float>(update_sdf),
            static_cast<float>(std::min(update_weight, w_max))};
  }
  const double total = prev_weight + update_weight;
  const double sdf = (prev_weight * static_cast<double>(prev.sdf) +
                      update_weight * update_sdf) /
                     total;
  return {static_cast<float>(sdf), static_cast<float>(std::min(total, w_max))};
}

}  // namespace sdfslam
