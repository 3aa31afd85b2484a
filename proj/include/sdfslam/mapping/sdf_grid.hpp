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

#ifndef SDFSLAM_MAPPING_SDF_GRID_HPP
#define SDFSLAM_MAPPING_SDF_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdfslam/core/grid_geometry.hpp"

namespace sdfslam {

// Truncated signed distance and accumulated weight of one cell. Stored in
// single precision, which is also the on-disk precision.
struct SdfCell {
  float sdf = 0.0f;
  float weight = 0.0f;

  friend bool operator==(const SdfCell&, const SdfCell&) = default;
};

// Dense row-major grid of SDF cells.
//
// Invariants: |sdf| <= truncation and 0 <= weight <= w_max in every cell.
// A cell with weight 0 has never been observed; its sdf is +truncation.
class SdfGrid {
 public:
  SdfGrid(const GridGeometry& geometry, double truncation, double w_max);

  const GridGeometry& geometry() const { return geometry_; }
  double truncation() const { return truncation_; }
  double w_max() const { return w_max_; }

  const SdfCell& cell(const CellIndex& index) const {
    return cells_[geometry_.linear_index(index)];
  }
  SdfCell& mutable_cell(const CellIndex& index) {
    return cells_[geometry_.linear_index(index)];
  }
  const SdfCell& at(std::size_t linear) const { return cells_[linear]; }
  SdfCell& mutable_at(std::size_t linear) { return cells_[linear]; }

  std::span<const SdfCell> cells() const { return cells_; }
  std::span<SdfCell> mutable_cells() { return cells_; }

  bool is_known(const CellIndex& index) const { return cell(index).weight > 0.0f; }
  std::size_t known_count() const;

  SdfCell unknown_cell() const {
    return {static_cast<float>(truncation_), 0.0f};
  }

  // FNV-1a over the raw cell bytes and the header; used to detect mutation.
  std::uint64_t checksum() const;

  friend bool operator==(const SdfGrid&, const SdfGrid&) = default;

 private:
  GridGeometry geometry_;
  double truncation_;
  double w_max_;
  std::vector<SdfCell> cells_;
};

// Merges one update into a cell:
//   F = (W_prev * F_prev + W_t * F_t) / (W_prev + W_t)
//   W = min(W_prev + W_t, w_max)
// An unknown cell (W_prev = 0) takes (F_t, W_t) unchanged.
SdfCell fuse_cell(const SdfCell& prev, double update_sdf, double update_weight,
                  double w_max);

}  // namespace sdfslam

#endif  // SDFSLAM_MAPPING_SDF_GRID_HPP
