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

#ifndef STOPLINE_TARGET_MAPS_HPP
#define STOPLINE_TARGET_MAPS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stopline/grid_map.hpp"

namespace stopline {

/// Per-cell nearest foreground cell of a mask. Invalid cells (empty
/// foreground) carry (-1, -1).
struct FeatureMap {
  int height{0};
  int width{0};
  std::vector<std::int32_t> site_row;
  std::vector<std::int32_t> site_col;

  bool valid(int row, int col) const {
    return site_row[static_cast<std::size_t>(row) * width + col] >= 0;
  }
  CellIndex site(int row, int col) const {
    const std::size_t i = static_cast<std::size_t>(row) * width + col;
    return {site_row[i], site_col[i]};
  }
};

/// Normalized truncated distance target: foreground cells hold exactly 1.0,
/// cells at Euclidean distance >= d_thresh (cells) hold exactly 0.0,
/// everything in between decays linearly as (d_thresh - d) / d_thresh.
struct DistanceMap {
  GridGeometry geo;
  int d_thresh{12};
  std::vector<double> values;

  double at(int row, int col) const { return values[geo.index(row, col)]; }
};

/// Offset target pointing to the nearest foreground cell: dx is the column
/// offset, dy the row offset, both divided by d_thresh. Foreground cells,
/// cells at distance >= d_thresh and invalid cells hold (0, 0).
struct DirectionMap {
  GridGeometry geo;
  int d_thresh{12};
  std::vector<double> dx;
  std::vector<double> dy;
};

struct ClassWeights {
  double background{1.0};
  double foreground{1.0};
};

/// Decomposed joint loss; total is computed as
/// ce_seg + lambda1 * l2_dist + lambda2 * l2_dir, exactly.
struct LossBreakdown {
  double ce_seg{0.0};
  double l2_dist{0.0};
  double l2_dir{0.0};
  double lambda1{0.5};
  double lambda2{0.5};
  double total{0.0};
};

inline constexpr int kDefaultDistanceThresholdCells = 12;

FeatureMap nearest_foreground_map(const SegMask& mask);
DistanceMap signed_distance_map(const SegMask& mask, int d_thresh);
DirectionMap direction_map(const SegMask& mask, int d_thresh);

/// All three targets from a single nearest-site transform.
struct TargetMaps {
  FeatureMap features;
  DistanceMap distance;
  DirectionMap direction;
};
TargetMaps make_target_maps(const SegMask& mask, int d_thresh);

/// Weighted binary cross-entropy over the segmentation grid plus L2 terms
/// over the distance and direction grids (direction averaged over both
/// offset grids). Probabilities are clamped to [1e-7, 1 - 1e-7] before the
/// log. All prediction grids must match the ground-truth dimensions.
LossBreakdown joint_loss(std::span<const double> pred_seg, std::span<const double> pred_dist,
                         std::span<const double> pred_dx, std::span<const double> pred_dy,
                         const SegMask& gt_seg, const DistanceMap& gt_dist,
                         const DirectionMap& gt_dir,
                         std::optional<ClassWeights> class_weights = std::nullopt);

}  // namespace stopline

#endif  // STOPLINE_TARGET_MAPS_HPP
