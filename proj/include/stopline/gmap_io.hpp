// Copyright 2026 Stopline Toolkit Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STOPLINE_GMAP_IO_HPP
#define STOPLINE_GMAP_IO_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "stopline/grid_map.hpp"
#include "stopline/target_maps.hpp"

namespace stopline {

/// Parse failure with the byte offset where the file stopped making sense.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::size_t byte_offset)
      : std::runtime_error(message + " (byte offset " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// GMAP container, little-endian:
//   magic "GMAP", version u16 = 1, channel_count u16,
//   height u32, width u32, resolution_micrometers u32,
//   ego_row u32, ego_col u32, ego_heading_microradians i32,
//   then per channel: channel_id u16 followed by height*width f32, row-major.
// Readers reject unknown magic/version and duplicated channel ids.
// Resolution is stored at micrometer and heading at microradian precision.

inline constexpr std::uint16_t kGmapVersion = 1;

// Channel ids of single-raster payloads that reuse the container.
inline constexpr std::uint16_t kMaskChannelId = 100;
inline constexpr std::uint16_t kDistanceChannelId = 101;
inline constexpr std::uint16_t kDirectionDxChannelId = 102;
inline constexpr std::uint16_t kDirectionDyChannelId = 103;

struct GmapChannel {
  std::uint16_t id{0};
  std::vector<float> data;
};

struct GmapPayload {
  GridGeometry geo;
  std::vector<GmapChannel> channels;
};

void write_gmap(const std::filesystem::path& path, const GmapPayload& payload);
GmapPayload read_gmap(const std::filesystem::path& path);

// GridMap files: channel ids must be the six known layers.
void save_grid_map(const std::filesystem::path& path, const GridMap& grid);
GridMap load_grid_map(const std::filesystem::path& path);

// Mask files: single channel id 100; values are coerced to {0,1} by a > 0.5
// threshold on load.
void save_mask(const std::filesystem::path& path, const SegMask& mask);
SegMask load_mask(const std::filesystem::path& path);

// Target-map files: channel id 101 (distance) and 102/103 (direction).
// The container does not carry d_thresh; the caller supplies it on load.
void save_distance_map(const std::filesystem::path& path, const DistanceMap& map);
DistanceMap load_distance_map(const std::filesystem::path& path,
                              int d_thresh = kDefaultDistanceThresholdCells);
void save_direction_map(const std::filesystem::path& path, const DirectionMap& map);
DirectionMap load_direction_map(const std::filesystem::path& path,
                                int d_thresh = kDefaultDistanceThresholdCells);

}  // namespace stopline

#endif  // STOPLINE_GMAP_IO_HPP
