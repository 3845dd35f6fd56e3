/*   Copyright 2026 The stormeye authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/geo/focus_grid.hpp"
#include "stormeye/image/binarize.hpp"
#include "stormeye/image/centroid.hpp"
#include "stormeye/image/image_io.hpp"
#include "stormeye/image/morphology.hpp"
#include "stormeye/locate/observations.hpp"
#include "stormeye/locate/pipeline_config.hpp"
#include "stormeye/storm/storm_fis.hpp"

namespace stormeye::locate {

struct SelectedBlock {
  int row = 0;
  int col = 0;
  storm::EyeVerdict verdict;
};

/// Judges every observed block and picks the winner: the block with the
/// highest crisp value among those judged "present". Exact ties fall to the
/// block closer (great-circle) to the grid center, then to row-major order,
/// so the choice does not depend on observation order. Returns nothing when
/// no block is present.
inline std::optional<SelectedBlock> select_block(const geo::FocusGrid& grid,
                                                 const std::vector<BlockObservation>& obs,
                                                 const storm::StormFis& fis) {
  if (obs.empty()) throw ArgumentError("select_block: empty observation list");
  for (std::size_t i = 0; i < obs.size(); ++i)
    for (std::size_t j = i + 1; j < obs.size(); ++j)
      if (obs[i].row == obs[j].row && obs[i].col == obs[j].col)
        throw ArgumentError("select_block: duplicate observation for block (" +
                            std::to_string(obs[i].row) + ", " + std::to_string(obs[i].col) +
                            ")");

  std::optional<SelectedBlock> best;
  double best_distance = 0.0;
  for (const auto& o : obs) {
    storm::EyeVerdict verdict = fis.judge(o.inputs);
    if (!verdict.present) continue;
    const double distance = geo::haversine_km(grid.cell_center(o.row, o.col), grid.center());
    const long this_rm = (o.row - 1) * geo::FocusGrid::kBlocksPerSide + o.col;
    bool take = false;
    if (!best) {
      take = true;
    } else if (verdict.crisp != best->verdict.crisp) {
      take = verdict.crisp > best->verdict.crisp;
    } else if (distance != best_distance) {
      take = distance < best_distance;
    } else {
      const long best_rm = (best->row - 1) * geo::FocusGrid::kBlocksPerSide + best->col;
      take = this_rm < best_rm;
    }
    if (take) {
      best = SelectedBlock{o.row, o.col, std::move(verdict)};
      best_distance = distance;
    }
  }
  return best;
}

struct RefinedEye {
  geo::GeoPoint point;
  bool degraded = false;  // no bright mass in the crop; fell back to the cell center
};

namespace detail {

// Pixel centers map linearly onto the grid box: 1-based pixel x has
// longitude west + (x - 0.5) * extent / width, row y latitude
// north - (y - 0.5) * extent / height (north is up).
struct FrameGeometry {
  geo::CellBounds box;
  int width = 0, height = 0;

  [[nodiscard]] double lon_of(double x) const {
    return box.west + (x - 0.5) * (box.east - box.west) / width;
  }
  [[nodiscard]] double lat_of(double y) const {
    return box.north - (y - 0.5) * (box.north - box.south) / height;
  }
  // First/last 1-based pixel index whose cell intersects [lo, hi].
  [[nodiscard]] std::pair<int, int> col_range(double lo, double hi) const {
    const double scale = width / (box.east - box.west);
    int first = static_cast<int>(std::floor((lo - box.west) * scale)) + 1;
    int last = static_cast<int>(std::ceil((hi - box.west) * scale));
    return {std::clamp(first, 1, width), std::clamp(last, 1, width)};
  }
  [[nodiscard]] std::pair<int, int> row_range(double lat_hi, double lat_lo) const {
    const double scale = height / (box.north - box.south);
    int first = static_cast<int>(std::floor((box.north - lat_hi) * scale)) + 1;
    int last = static_cast<int>(std::ceil((box.north - lat_lo) * scale));
    return {std::clamp(first, 1, height), std::clamp(last, 1, height)};
  }
};

}  // namespace detail

/// Refines the eye position inside the selected block: crops the frame to
/// the block plus a margin, binarizes, opens, and maps the center of gravity
/// back to geographic coordinates. A crop with no mass falls back to the
/// block's geometric center with the degraded flag set.
///
/// The frame must span exactly the grid extent; the pixel-geographic mapping
/// is the linear (equirectangular) one between the two boxes.
inline RefinedEye refine_eye(const geo::FocusGrid& grid, int row, int col,
                             const img::GrayImage& frame, const PipelineConfig& cfg = {}) {
  const geo::CellBounds extent = grid.extent();
  const geo::CellBounds block = grid.cell_bounds(row, col);
  const double margin = cfg.crop_margin_cells * geo::FocusGrid::kCellDegrees;
  const geo::CellBounds roi{std::max(block.south - margin, extent.south),
                            std::min(block.north + margin, extent.north),
                            std::max(block.west - margin, extent.west),
                            std::min(block.east + margin, extent.east)};

  const detail::FrameGeometry geom{extent, frame.width(), frame.height()};
  const auto [x_first, x_last] = geom.col_range(roi.west, roi.east);
  const auto [y_first, y_last] = geom.row_range(roi.north, roi.south);
  const img::GrayImage crop =
      frame.crop(x_first - 1, y_first - 1, x_last - x_first + 1, y_last - y_first + 1);

  const img::BinarizeResult binary = img::binarize(crop, cfg.threshold);
  const img::BinaryImage cleaned = img::denoise(binary.image, cfg.se_radius);

  if (cfg.debug_images) {
    img::write_png(crop, cfg.debug_dir + "/crop.png");
    img::write_png(binary.image.to_gray(), cfg.debug_dir + "/binary.png");
    img::write_png(cleaned.to_gray(), cfg.debug_dir + "/denoised.png");
  }

  try {
    const img::Centroid c = img::center_of_gravity(cleaned);
    const double x_full = (x_first - 1) + c.x;
    const double y_full = (y_first - 1) + c.y;
    return RefinedEye{geo::GeoPoint{geom.lat_of(y_full), geom.lon_of(x_full)}, false};
  } catch (const NoMassError&) {
    return RefinedEye{block.center(), true};
  }
}

struct LocateOutcome {
  std::optional<SelectedBlock> block;  // empty: eye absent
  std::optional<RefinedEye> eye;

  [[nodiscard]] bool present() const { return block.has_value(); }
};

/// Full single-frame flow: build the focus grid on the prior center, judge
/// the observed blocks, refine within the winner.
inline LocateOutcome locate_frame(const geo::GeoPoint& prior_center,
                                  const std::vector<BlockObservation>& obs,
                                  const img::GrayImage& frame, const storm::StormFis& fis,
                                  const PipelineConfig& cfg = {}) {
  const geo::FocusGrid grid(prior_center);
  LocateOutcome outcome;
  outcome.block = select_block(grid, obs, fis);
  if (outcome.block)
    outcome.eye = refine_eye(grid, outcome.block->row, outcome.block->col, frame, cfg);
  return outcome;
}

}  // namespace stormeye::locate
