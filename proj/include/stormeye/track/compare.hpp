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
#include <string>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/geo/geopoint.hpp"
#include "stormeye/track/track.hpp"

namespace stormeye::track {

/// Signed per-coordinate relative difference of a candidate position against
/// a reference, in percent. This is the validation metric the comparison
/// tables use; it is coordinate-wise and reference-anchored, not a distance.
struct TrackErrorRow {
  geo::GeoPoint reference;
  geo::GeoPoint candidate;
  double lat_err_pct = 0.0;
  double lon_err_pct = 0.0;
};

inline TrackErrorRow error_percentage(const geo::GeoPoint& reference,
                                      const geo::GeoPoint& candidate) {
  if (reference.lat == 0.0 || reference.lon == 0.0)
    throw RangeError("error_percentage: undefined for a zero reference coordinate");
  TrackErrorRow row;
  row.reference = reference;
  row.candidate = candidate;
  row.lat_err_pct = (candidate.lat - reference.lat) / reference.lat * 100.0;
  row.lon_err_pct = (candidate.lon - reference.lon) / reference.lon * 100.0;
  return row;
}

enum class MatchBy { Row, Timestamp };

struct ComparisonResult {
  std::vector<TrackErrorRow> rows;
  double mean_abs_lat_pct = 0.0;
  double mean_abs_lon_pct = 0.0;
  double max_abs_lat_pct = 0.0;
  double max_abs_lon_pct = 0.0;
};

/// Pairs up reference and candidate points (by position in the track, or by
/// timestamp equality) and computes one error row per pair, order-preserving.
/// Unmatched points are an alignment error that lists the orphans.
inline ComparisonResult compare_tracks(const Track& reference, const Track& candidate,
                                       MatchBy match = MatchBy::Row) {
  std::vector<std::pair<const TrackPoint*, const TrackPoint*>> pairs;
  if (match == MatchBy::Row) {
    if (reference.size() != candidate.size())
      throw AlignmentError("compare_tracks: row-matched tracks differ in length (" +
                           std::to_string(reference.size()) + " vs " +
                           std::to_string(candidate.size()) + ")");
    for (std::size_t i = 0; i < reference.size(); ++i)
      pairs.emplace_back(&reference.points[i], &candidate.points[i]);
  } else {
    std::vector<std::string> orphans;
    for (const auto& r : reference.points) {
      const auto it = std::find_if(candidate.points.begin(), candidate.points.end(),
                                   [&](const TrackPoint& c) { return c.timestamp == r.timestamp; });
      if (it == candidate.points.end())
        orphans.push_back("reference " + r.timestamp);
      else
        pairs.emplace_back(&r, &*it);
    }
    for (const auto& c : candidate.points) {
      const bool matched = std::any_of(reference.points.begin(), reference.points.end(),
                                       [&](const TrackPoint& r) { return r.timestamp == c.timestamp; });
      if (!matched) orphans.push_back("candidate " + c.timestamp);
    }
    if (!orphans.empty()) {
      std::string msg = "compare_tracks: unmatched timestamps:";
      for (const auto& o : orphans) msg += " [" + o + "]";
      throw AlignmentError(msg);
    }
  }

  ComparisonResult result;
  for (const auto& [ref, cand] : pairs)
    result.rows.push_back(error_percentage(ref->position, cand->position));
  if (!result.rows.empty()) {
    double sum_lat = 0.0, sum_lon = 0.0;
    for (const auto& row : result.rows) {
      sum_lat += std::abs(row.lat_err_pct);
      sum_lon += std::abs(row.lon_err_pct);
      result.max_abs_lat_pct = std::max(result.max_abs_lat_pct, std::abs(row.lat_err_pct));
      result.max_abs_lon_pct = std::max(result.max_abs_lon_pct, std::abs(row.lon_err_pct));
    }
    result.mean_abs_lat_pct = sum_lat / static_cast<double>(result.rows.size());
    result.mean_abs_lon_pct = sum_lon / static_cast<double>(result.rows.size());
  }
  return result;
}

}  // namespace stormeye::track
