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

#ifndef STOPLINE_GRID_MAP_HPP
#define STOPLINE_GRID_MAP_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace stopline {

/// Point in the ego metric frame: x lateral (right-positive), y longitudinal
/// (forward-positive), meters.
struct MetricPoint {
  double x{0.0};
  double y{0.0};
};

inline MetricPoint operator+(MetricPoint a, MetricPoint b) { return {a.x + b.x, a.y + b.y}; }
inline MetricPoint operator-(MetricPoint a, MetricPoint b) { return {a.x - b.x, a.y - b.y}; }
inline MetricPoint operator*(MetricPoint a, double s) { return {a.x * s, a.y * s}; }
inline MetricPoint operator*(double s, MetricPoint a) { return a * s; }
inline double dot(MetricPoint a, MetricPoint b) { return a.x * b.x + a.y * b.y; }
inline double cross(MetricPoint a, MetricPoint b) { return a.x * b.y - a.y * b.x; }
inline double norm(MetricPoint a) { return std::hypot(a.x, a.y); }
inline double distance(MetricPoint a, MetricPoint b) { return norm(a - b); }

struct CellIndex {
  int row{0};
  int col{0};
  bool operator==(const CellIndex&) const = default;
};

/// The six grid-map layers. The numeric values are the channel ids of the
/// GMAP file format and must not be reordered.
enum class ChannelId : std::uint16_t {
  kGroundMarkings = 0,
  kLidarIntensity = 1,
  kSemanticsGround = 2,
  kOccupancy = 3,
  kTrafficHistory = 4,
  kElevation = 5,
};

inline constexpr std::array<ChannelId, 6> kAllChannels{
    ChannelId::kGroundMarkings,  ChannelId::kLidarIntensity, ChannelId::kSemanticsGround,
    ChannelId::kOccupancy,       ChannelId::kTrafficHistory, ChannelId::kElevation,
};

/// Every channel except elevation stores normalized intensity in [0, 1];
/// elevation stores meters.
inline constexpr bool is_intensity_channel(ChannelId id) {
  return id != ChannelId::kElevation;
}

const char* to_string(ChannelId id);

/// Georeference shared by all rasters of one frame.
///
/// Orientation convention: the ego vehicle looks "up" in the raster, i.e.
/// the row index decreases in the direction of travel and the column index
/// grows to the right. ego_heading is the rotation of the travel direction
/// relative to the raster's forward (+y) axis, counterclockwise positive.
struct GridGeometry {
  int height{192};
  int width{192};
  double resolution{0.26};  // meters per cell
  int ego_row{160};
  int ego_col{96};
  double ego_heading{0.0};  // radians

  bool in_bounds(CellIndex c) const {
    return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
  }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(col);
  }

  /// Metric center of a cell in the ego frame. Affine; cells outside the
  /// raster are allowed.
  MetricPoint cell_to_metric(CellIndex c) const {
    return {(c.col - ego_col) * resolution, (ego_row - c.row) * resolution};
  }

  /// Nearest-cell-center quantization (may return out-of-bounds indices;
  /// the caller clips).
  CellIndex metric_to_cell(MetricPoint p) const {
    return {ego_row - static_cast<int>(std::lround(p.y / resolution)),
            ego_col + static_cast<int>(std::lround(p.x / resolution))};
  }

  /// Throws std::invalid_argument on degenerate dimensions, nonpositive
  /// resolution or an out-of-bounds ego cell.
  void validate() const;

  bool operator==(const GridGeometry&) const = default;
};

/// Vehicle-centered multi-channel BEV raster. Each channel is stored
/// row-major, height x width floats. The map is meant to be filled once and
/// then shared read-only; all transforms are pure.
class GridMap {
 public:
  GridMap(std::span<const ChannelId> channel_ids, const GridGeometry& geo);

  const GridGeometry& geometry() const { return geo_; }
  int height() const { return geo_.height; }
  int width() const { return geo_.width; }
  double resolution() const { return geo_.resolution; }

  bool has_channel(ChannelId id) const { return channels_.count(id) != 0; }
  std::size_t channel_count() const { return channels_.size(); }
  std::vector<ChannelId> channel_ids() const;  // ascending id order

  std::span<float> channel(ChannelId id);
  std::span<const float> channel(ChannelId id) const;

  float& at(ChannelId id, int row, int col);
  float at(ChannelId id, int row, int col) const;

 private:
  GridGeometry geo_;
  std::map<ChannelId, std::vector<float>> channels_;
};

/// Binary stop-line mask. Carries the full georeference of the frame it was
/// derived from so downstream geometry lands in the ego metric frame.
struct SegMask {
  GridGeometry geo;
  std::vector<std::uint8_t> data;  // exactly 0 or 1, row-major

  SegMask() = default;
  explicit SegMask(const GridGeometry& g) : geo(g), data(g.cell_count(), 0) {}

  std::uint8_t at(int row, int col) const { return data[geo.index(row, col)]; }
  void set(int row, int col, std::uint8_t v) { data[geo.index(row, col)] = v; }
  int height() const { return geo.height; }
  int width() const { return geo.width; }
};

}  // namespace stopline

#endif  // STOPLINE_GRID_MAP_HPP
