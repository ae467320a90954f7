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

// Shared kernels of the exact Euclidean nearest-site transform. The serial
// and the OpenMP entry points differ only in how they drive these loops, so
// their outputs are bit-identical by construction.

#ifndef STOPLINE_SRC_EDT_COMMON_HPP
#define STOPLINE_SRC_EDT_COMMON_HPP

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "stopline/distance_transform.hpp"

namespace stopline::detail {

inline std::int64_t sq(std::int64_t v) { return v * v; }

// Floor division for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Pass 1, one column: nearest foreground ROW for every row of the column,
// ties resolved to the smaller row. -1 when the column has no foreground.
inline void column_sweep(const std::uint8_t* mask, int height, int width, int col,
                         std::int32_t* nearest_row) {
  std::int32_t last = -1;
  for (int r = 0; r < height; ++r) {
    if (mask[static_cast<std::size_t>(r) * width + col]) last = r;
    nearest_row[static_cast<std::size_t>(r) * width + col] = last;
  }
  std::int32_t next = -1;
  for (int r = height - 1; r >= 0; --r) {
    const std::size_t idx = static_cast<std::size_t>(r) * width + col;
    if (mask[idx]) next = r;
    const std::int32_t above = nearest_row[idx];
    if (above < 0) {
      nearest_row[idx] = next;
    } else if (next >= 0 && (next - r) < (r - above)) {
      // strict: a distance tie keeps the smaller row (above)
      nearest_row[idx] = next;
    }
  }
}

// Scratch buffers for one row-envelope scan; reused across rows per thread.
struct RowScratch {
  std::vector<std::int64_t> g2;        // squared vertical distance, by column
  std::vector<std::int32_t> site_row;  // nearest fg row for this row, by column
  std::vector<std::int32_t> stack_col;
  std::vector<std::int32_t> stack_start;

  explicit RowScratch(int width)
      : g2(width), site_row(width), stack_col(width), stack_start(width) {}
};

// Lexicographic winner test between the candidate parabolas of columns c and
// u (c < u) at position j: smaller value wins; on an exact value tie the
// smaller (site row, column) pair wins.
inline bool column_wins(std::int64_t vc, std::int64_t vu, std::int32_t row_c, std::int32_t row_u) {
  if (vc != vu) return vc < vu;
  return row_c <= row_u;  // equal rows fall back to the column order, c < u
}

// Pass 2, one row: lower-envelope scan over the candidate columns.
// fg_cols lists the columns that contain any foreground, ascending.
inline void row_envelope(int row, int width, const std::vector<std::int32_t>& fg_cols,
                         const std::int32_t* nearest_row, RowScratch& scratch,
                         NearestSiteField& out) {
  const std::size_t base = static_cast<std::size_t>(row) * width;
  if (fg_cols.empty()) {
    for (int j = 0; j < width; ++j) {
      out.site_row[base + j] = -1;
      out.site_col[base + j] = -1;
      out.dist_sq[base + j] = -1;
    }
    return;
  }

  for (std::int32_t c : fg_cols) {
    const std::int32_t r = nearest_row[base + c];
    scratch.site_row[c] = r;
    scratch.g2[c] = sq(static_cast<std::int64_t>(row) - r);
  }

  auto value_at = [&](std::int32_t parabola_col, std::int64_t j) {
    return sq(j - parabola_col) + scratch.g2[parabola_col];
  };

  std::int32_t* t = scratch.stack_col.data();
  std::int32_t* s = scratch.stack_start.data();
  int q = 0;
  t[0] = fg_cols[0];
  s[0] = 0;

  for (std::size_t k = 1; k < fg_cols.size(); ++k) {
    const std::int32_t u = fg_cols[k];
    while (q >= 0) {
      const std::int32_t c = t[q];
      if (column_wins(value_at(c, s[q]), value_at(u, s[q]), scratch.site_row[c],
                      scratch.site_row[u])) {
        break;  // c still reigns where its segment starts
      }
      --q;
    }
    if (q < 0) {
      q = 0;
      t[0] = u;
      s[0] = 0;
      continue;
    }
    const std::int32_t c = t[q];
    // Largest integer j where c still beats u; the crossing of the two
    // parabolas is unique because their difference is linear in j.
    const std::int64_t num = sq(u) - sq(c) + scratch.g2[u] - scratch.g2[c];
    const std::int64_t den = 2 * static_cast<std::int64_t>(u - c);
    std::int64_t last_c = floor_div(num, den);
    if (num % den == 0 && scratch.site_row[c] > scratch.site_row[u]) {
      --last_c;  // exact integer crossing decided by the site-row tie rule
    }
    const std::int64_t first_u = last_c + 1;
    if (first_u < width) {
      ++q;
      t[q] = u;
      s[q] = static_cast<std::int32_t>(first_u);
    }
  }

  for (int j = width - 1; j >= 0; --j) {
    while (q > 0 && j < s[q]) --q;
    const std::int32_t c = t[q];
    out.site_row[base + j] = scratch.site_row[c];
    out.site_col[base + j] = c;
    out.dist_sq[base + j] = value_at(c, j);
  }
}

// Columns containing at least one foreground cell, ascending.
inline std::vector<std::int32_t> foreground_columns(const std::uint8_t* mask, int height,
                                                    int width) {
  std::vector<std::int32_t> cols;
  for (int c = 0; c < width; ++c) {
    for (int r = 0; r < height; ++r) {
      if (mask[static_cast<std::size_t>(r) * width + c]) {
        cols.push_back(c);
        break;
      }
    }
  }
  return cols;
}

}  // namespace stopline::detail

#endif  // STOPLINE_SRC_EDT_COMMON_HPP
