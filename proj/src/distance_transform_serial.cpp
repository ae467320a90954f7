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

#include <stdexcept>

#include "edt_common.hpp"
#include "stopline/distance_transform.hpp"

namespace stopline {

NearestSiteField nearest_sites_serial(const SegMask& mask) {
  const int height = mask.height();
  const int width = mask.width();
  if (height < 1 || width < 1) {
    throw std::invalid_argument("nearest_sites_serial: zero-dimension raster");
  }

  NearestSiteField out;
  out.height = height;
  out.width = width;
  out.site_row.resize(mask.geo.cell_count());
  out.site_col.resize(mask.geo.cell_count());
  out.dist_sq.resize(mask.geo.cell_count());

  std::vector<std::int32_t> nearest_row(mask.geo.cell_count());
  const std::uint8_t* data = mask.data.data();

  for (int c = 0; c < width; ++c) {
    detail::column_sweep(data, height, width, c, nearest_row.data());
  }

  const std::vector<std::int32_t> fg_cols = detail::foreground_columns(data, height, width);

  detail::RowScratch scratch(width);
  for (int r = 0; r < height; ++r) {
    detail::row_envelope(r, width, fg_cols, nearest_row.data(), scratch, out);
  }

  return out;
}

}  // namespace stopline
