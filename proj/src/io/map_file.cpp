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

#include "sdfslam/io/map_file.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

constexpr char kMagic[4] = {'S', 'D', 'F', '2'};
constexpr std::size_t kHeaderSize = 4 + 4 + 3 * 8 + 2 * 8 + 2 * 8;

template <typename U>
void put_uint(std::vector<std::uint8_t>& out, U value) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

void put_f64(std::vector<std::uint8_t>& out, double v) { put_uint(out, std::bit_cast<std::uint64_t>(v)); }
void put_f32(std::vector<std::uint8_t>& out, float v) { put_uint(out, std::bit_cast<std::uint32_t>(v)); }

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <typename U>
  U uint() {
    if (bytes_.size() - pos_ < sizeof(U)) throw FormatError("map file is truncated");
    U value = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
      value |= static_cast<U>(static_cast<U>(bytes_[pos_ + i]) << (8 * i));
    }
    pos_ += sizeof(U);
    return value;
  }
  double f64() { return std::bit_cast<double>(uint<std::uint64_t>()); }
  float f32() { return std::bit_cast<float>(uint<std::uint32_t>()); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_map(const SdfGrid& grid) {
  const GridGeometry& g = grid.geometry();
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + 8 * g.cell_count());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_uint<std::uint32_t>(out, kMapFileVersion);
  put_f64(out, g.origin().x());
  put_f64(out, g.origin().y());
  put_f64(out, g.resolution());
  put_uint<std::uint64_t>(out, static_cast<std::uint64_t>(g.width()));
  put_uint<std::uint64_t>(out, static_cast<std::uint64_t>(g.height()));
  put_f64(out, grid.truncation());
  put_f64(out, grid.w_max());
  for (const SdfCell& c : grid.cells()) put_f32(out, c.sdf);
  for (const SdfCell& c : grid.cells()) put_f32(out, c.weight);
  return out;
}

SdfGrid decode_map(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw FormatError("not an SDF2 map file");
  }
  Reader in(bytes.subspan(4));
  const auto version = in.uint<std::uint32_t>();
  if (version != kMapFileVersion) {
    throw VersionError("unsupported map file version " + std::to_string(version));
  }
  const double ox = in.f64();
  const double oy = in.f64();
  const double resolution = in.f64();
  const auto width = in.uint<std::uint64_t>();
  const auto height = in.uint<std::uint64_t>();
  const double truncation = in.f64();
  const double w_max = in.f64();

  constexpr auto kMaxSide = static_cast<std::uint64_t>(std::numeric_limits<int>::max());
  if (width == 0 || height == 0 || width > kMaxSide || height > kMaxSide) {
    throw FormatError("invalid map dimensions");
  }
  if (in.remaining() / 8 / width < height) throw FormatError("map file is truncated");
  if (in.remaining() != 8 * width * height) throw FormatError("map file has trailing data");

  std::optional<SdfGrid> grid;
  try {
    grid.emplace(GridGeometry(Point2(ox, oy), resolution, static_cast<int>(width),
                              static_cast<int>(height)),
                 truncation, w_max);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid map header: ") + e.what());
  }
  auto cells = grid->mutable_cells();
  for (SdfCell& c : cells) c.sdf = in.f32();
  for (SdfCell& c : cells) c.weight = in.f32();
  return std::move(*grid);
}

void save_map(const SdfGrid& grid, const std::string& path) {
  const auto bytes = encode_map(grid);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write map file " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing map file " + path);
}

SdfGrid load_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open map file " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_map(bytes);
}

}  // namespace sdfslam
