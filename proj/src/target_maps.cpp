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

#include "stopline/target_maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stopline/distance_transform.hpp"

namespace stopline {

namespace {

FeatureMap features_from_sites(const NearestSiteField& sites) {
  FeatureMap f;
  f.height = sites.height;
  f.width = sites.width;
  f.site_row = sites.site_row;
  f.site_col = sites.site_col;
  return f;
}

DistanceMap distance_from_sites(const NearestSiteField& sites, const GridGeometry& geo,
                                int d_thresh) {
  DistanceMap d;
  d.geo = geo;
  d.d_thresh = d_thresh;
  d.values.assign(geo.cell_count(), 0.0);
  const std::int64_t thresh_sq = static_cast<std::int64_t>(d_thresh) * d_thresh;
  const std::size_t n = geo.cell_count();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const std::int64_t d2 = sites.dist_sq[i];
    if (d2 < 0 || d2 >= thresh_sq) continue;  // empty foreground or clipped
    if (d2 == 0) {
      d.values[i] = 1.0;
    } else {
      d.values[i] = (d_thresh - std::sqrt(static_cast<double>(d2))) / d_thresh;
    }
  }
  return d;
}

DirectionMap direction_from_sites(const NearestSiteField& sites, const GridGeometry& geo,
                                  int d_thresh) {
  DirectionMap e;
  e.geo = geo;
  e.d_thresh = d_thresh;
  e.dx.assign(geo.cell_count(), 0.0);
  e.dy.assign(geo.cell_count(), 0.0);
  const std::int64_t thresh_sq = static_cast<std::int64_t>(d_thresh) * d_thresh;
#pragma omp parallel for schedule(static)
  for (int r = 0; r < geo.height; ++r) {
    for (int c = 0; c < geo.width; ++c) {
      const std::size_t i = geo.index(r, c);
      const std::int64_t d2 = sites.dist_sq[i];
      if (d2 <= 0 || d2 >= thresh_sq) continue;  // fg, clipped or invalid
      e.dx[i] = (sites.site_col[i] - c) / static_cast<double>(d_thresh);
      e.dy[i] = (sites.site_row[i] - r) / static_cast<double>(d_thresh);
    }
  }
  return e;
}

void require_threshold(int d_thresh) {
  if (d_thresh < 1) {
    throw std::invalid_argument("d_thresh must be a positive integer, got " +
                                std::to_string(d_thresh));
  }
}

}  // namespace

FeatureMap nearest_foreground_map(const SegMask& mask) {
  return features_from_sites(nearest_sites(mask));
}

DistanceMap signed_distance_map(const SegMask& mask, int d_thresh) {
  require_threshold(d_thresh);
  return distance_from_sites(nearest_sites(mask), mask.geo, d_thresh);
}

DirectionMap direction_map(const SegMask& mask, int d_thresh) {
  require_threshold(d_thresh);
  return direction_from_sites(nearest_sites(mask), mask.geo, d_thresh);
}

TargetMaps make_target_maps(const SegMask& mask, int d_thresh) {
  require_threshold(d_thresh);
  const NearestSiteField sites = nearest_sites(mask);
  TargetMaps t;
  t.features = features_from_sites(sites);
  t.distance = distance_from_sites(sites, mask.geo, d_thresh);
  t.direction = direction_from_sites(sites, mask.geo, d_thresh);
  return t;
}

LossBreakdown joint_loss(std::span<const double> pred_seg, std::span<const double> pred_dist,
                         std::span<const double> pred_dx, std::span<const double> pred_dy,
                         const SegMask& gt_seg, const DistanceMap& gt_dist,
                         const DirectionMap& gt_dir, std::optional<ClassWeights> class_weights) {
  const std::size_t n = gt_seg.geo.cell_count();
  if (gt_dist.values.size() != n || gt_dir.dx.size() != n || gt_dir.dy.size() != n ||
      pred_seg.size() != n || pred_dist.size() != n || pred_dx.size() != n ||
      pred_dy.size() != n) {
    throw std::invalid_argument("joint_loss: prediction/target grid shapes do not match");
  }

  const double w_bg = class_weights ? class_weights->background : 1.0;
  const double w_fg = class_weights ? class_weights->foreground : 1.0;
  constexpr double kEps = 1e-7;

  // Serial accumulation: the printed breakdown must be byte-stable across
  // runs regardless of the thread count.
  double ce_sum = 0.0;
  double dist_sum = 0.0;
  double dir_sum = 0.0;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const double p = std::clamp(pred_seg[i], kEps, 1.0 - kEps);
    ce_sum += gt_seg.data[i] ? -w_fg * std::log(p) : -w_bg * std::log(1.0 - p);
    const double dd = pred_dist[i] - gt_dist.values[i];
    dist_sum += dd * dd;
    const double ex = pred_dx[i] - gt_dir.dx[i];
    const double ey = pred_dy[i] - gt_dir.dy[i];
    dir_sum += ex * ex + ey * ey;
  }

  LossBreakdown out;
  out.ce_seg = ce_sum / static_cast<double>(n);
  out.l2_dist = dist_sum / static_cast<double>(n);
  out.l2_dir = dir_sum / static_cast<double>(2 * n);
  out.total = out.ce_seg + out.lambda1 * out.l2_dist + out.lambda2 * out.l2_dir;
  return out;
}

}  // namespace stopline
