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

#include <cmath>
#include <string>

#include "stormeye/errors.hpp"
#include "stormeye/geo/geopoint.hpp"

namespace stormeye::geo {

/// Geographic bounds of one grid cell (or the whole grid); north > south,
/// east > west.
struct CellBounds {
  double south = 0.0;
  double north = 0.0;
  double west = 0.0;
  double east = 0.0;

  [[nodiscard]] GeoPoint center() const {
    return GeoPoint{(south + north) / 2.0, (west + east) / 2.0};
  }
  [[nodiscard]] bool contains(const GeoPoint& p) const {
    return p.lat >= south && p.lat <= north && p.lon >= west && p.lon <= east;
  }
};

/// The search window around the prior storm center: a 13.2 x 13.2 degree box
/// (about 1400 x 1400 km) split into 15 x 15 cells of 0.88 degrees, wide
/// enough to cover a whole storm (diameters run roughly 100 to 2000 km).
///
/// Rows and columns are 1-based. Row 1 is the northern edge and column 1 the
/// western edge, matching image orientation with north up; the prior center
/// sits in the middle cell (8, 8). Cell mapping is equirectangular, the same
/// flat degree-km equivalence the extent is defined with.
class FocusGrid {
 public:
  static constexpr double kExtentDegrees = 13.2;
  static constexpr double kExtentKm = 1400.0;
  static constexpr int kBlocksPerSide = 15;
  static constexpr double kCellDegrees = kExtentDegrees / kBlocksPerSide;  // 0.88
  static constexpr int kCenterRow = 8, kCenterCol = 8;

  /// Maximum prior-center latitude; beyond this the flat cell mapping is no
  /// longer a sane approximation.
  static constexpr double kMaxCenterLatitude = 75.0;

  explicit FocusGrid(const GeoPoint& prior_center) : center_(validated(prior_center)) {
    if (std::abs(center_.lat) > kMaxCenterLatitude)
      throw RangeError("focus grid: |latitude| > " + std::to_string(kMaxCenterLatitude) +
                       " is unsupported");
    if (center_.lon - kExtentDegrees / 2 < -180.0 || center_.lon + kExtentDegrees / 2 > 180.0)
      throw ArgumentError("focus grid: window would cross the antimeridian");
  }

  [[nodiscard]] const GeoPoint& center() const { return center_; }

  /// Flat scale implied by the 13.2 degree / 1400 km equivalence.
  [[nodiscard]] static constexpr double km_per_degree() { return kExtentKm / kExtentDegrees; }

  [[nodiscard]] CellBounds extent() const {
    const double half = kExtentDegrees / 2;
    return CellBounds{center_.lat - half, center_.lat + half, center_.lon - half,
                      center_.lon + half};
  }

  [[nodiscard]] CellBounds cell_bounds(int row, int col) const {
    check_index(row, col);
    const CellBounds e = extent();
    const double north = e.north - (row - 1) * kCellDegrees;
    const double west = e.west + (col - 1) * kCellDegrees;
    return CellBounds{north - kCellDegrees, north, west, west + kCellDegrees};
  }

  [[nodiscard]] GeoPoint cell_center(int row, int col) const {
    return cell_bounds(row, col).center();
  }

  static void check_index(int row, int col) {
    if (row < 1 || row > kBlocksPerSide || col < 1 || col > kBlocksPerSide)
      throw RangeError("focus grid: block index (" + std::to_string(row) + ", " +
                       std::to_string(col) + ") outside [1," +
                       std::to_string(kBlocksPerSide) + "]^2");
  }

 private:
  GeoPoint center_;
};

}  // namespace stormeye::geo
