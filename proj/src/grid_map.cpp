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

#include "stopline/grid_map.hpp"

#include <stdexcept>
#include <string>

namespace stopline {

const char* to_string(ChannelId id) {
  switch (id) {
    case ChannelId::kGroundMarkings: return "ground_markings";
    case ChannelId::kLidarIntensity: return "lidar_intensity";
    case ChannelId::kSemanticsGround: return "semantics_ground";
    case ChannelId::kOccupancy: return "occupancy";
    case ChannelId::kTrafficHistory: return "traffic_history";
    case ChannelId::kElevation: return "elevation";
  }
  return "unknown";
}

void GridGeometry::validate() const {
  if (height < 1 || width < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1x1, got " +
                                std::to_string(height) + "x" + std::to_string(width));
  }
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw std::invalid_argument("resolution must be a positive finite value");
  }
  if (!in_bounds({ego_row, ego_col})) {
    throw std::invalid_argument("ego cell (" + std::to_string(ego_row) + "," +
                                std::to_string(ego_col) + ") is outside the raster");
  }
  if (!std::isfinite(ego_heading)) {
    throw std::invalid_argument("ego heading must be finite");
  }
}

GridMap::GridMap(std::span<const ChannelId> channel_ids, const GridGeometry& geo) : geo_(geo) {
  geo_.validate();
  for (ChannelId id : channel_ids) {
    channels_.emplace(id, std::vector<float>(geo_.cell_count(), 0.0f));
  }
}

std::vector<ChannelId> GridMap::channel_ids() const {
  std::vector<ChannelId> ids;
  ids.reserve(channels_.size());
  for (const auto& [id, data] : channels_) ids.push_back(id);
  return ids;
}

std::span<float> GridMap::channel(ChannelId id) {
  auto it = channels_.find(id);
  if (it == channels_.end()) {
    throw std::invalid_argument(std::string("grid map has no channel '") + to_string(id) + "'");
  }
  return it->second;
}

std::span<const float> GridMap::channel(ChannelId id) const {
  auto it = channels_.find(id);
  if (it == channels_.end()) {
    throw std::invalid_argument(std::string("grid map has no channel '") + to_string(id) + "'");
  }
  return it->second;
}

float& GridMap::at(ChannelId id, int row, int col) {
  return channel(id)[geo_.index(row, col)];
}

float GridMap::at(ChannelId id, int row, int col) const {
  return channel(id)[geo_.index(row, col)];
}

}  // namespace stopline
