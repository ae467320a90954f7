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

#ifndef STOPLINE_DISTANCE_TRANSFORM_HPP
#define STOPLINE_DISTANCE_TRANSFORM_HPP

#include <cstdint>
#include <vector>

#include "stopline/grid_map.hpp"

namespace stopline {

/// Exact nearest-foreground field of a binary mask.
///
/// For every cell, site_row/site_col hold the foreground cell at minimal
/// Euclidean distance and dist_sq the squared distance as an exact integer.
/// Equidistant foreground cells are resolved to the smallest row index,
/// then the smallest column index. Cells of an all-background mask are
/// invalid (site_row == site_col == -1, dist_sq == -1).
struct NearestSiteField {
  int height{0};
  int width{0};
  std::vector<std::int32_t> site_row;
  std::vector<std::int32_t> site_col;
  std::vector<std::int64_t> dist_sq;

  bool valid(int row, int col) const {
    return site_row[static_cast<std::size_t>(row) * width + col] >= 0;
  }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
};

/// Exact Euclidean nearest-site transform, two-pass dimensional reduction:
/// a per-column 1D sweep followed by a per-row lower-envelope scan over the
/// column candidates. Linear in the number of cells. Both passes are
/// parallelized with OpenMP (columns, then rows, are independent).
///
/// Throws std::invalid_argument on a zero-dimension raster.
NearestSiteField nearest_sites(const SegMask& mask);

/// Single-threaded reference implementation of the same algorithm with the
/// same tie rule, kept for differential testing and benchmarking. Output is
/// bit-identical to nearest_sites().
NearestSiteField nearest_sites_serial(const SegMask& mask);

}  // namespace stopline

#endif  // STOPLINE_DISTANCE_TRANSFORM_HPP
