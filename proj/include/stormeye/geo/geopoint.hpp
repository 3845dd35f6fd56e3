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
#include <numbers>
#include <string>

#include "stormeye/errors.hpp"

namespace stormeye::geo {

/// Position in decimal degrees: latitude in [-90, 90], longitude in
/// [-180, 180].
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  [[nodiscard]] bool operator==(const GeoPoint&) const = default;
};

inline GeoPoint validated(const GeoPoint& p) {
  if (p.lat < -90.0 || p.lat > 90.0)
    throw RangeError("latitude " + std::to_string(p.lat) + " outside [-90, 90]");
  if (p.lon < -180.0 || p.lon > 180.0)
    throw RangeError("longitude " + std::to_string(p.lon) + " outside [-180, 180]");
  return p;
}

inline constexpr double kEarthRadiusKm = 6371.0;

/// Great-circle distance (haversine). Used only for deterministic
/// tie-breaking, not as a track error metric.
inline double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  constexpr double deg = std::numbers::pi / 180.0;
  const double dlat = (b.lat - a.lat) * deg;
  const double dlon = (b.lon - a.lon) * deg;
  const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.lat * deg) * std::cos(b.lat * deg) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(s)));
}

}  // namespace stormeye::geo
