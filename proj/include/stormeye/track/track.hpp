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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/geo/geopoint.hpp"

namespace stormeye::track {

/// Where a track point came from.
enum class Source { IMD, CIMSS, METHOD };

inline const char* to_string(Source s) {
  switch (s) {
    case Source::IMD: return "IMD";
    case Source::CIMSS: return "CIMSS";
    case Source::METHOD: return "METHOD";
  }
  return "METHOD";
}

inline Source source_from_string(const std::string& name) {
  if (name == "IMD") return Source::IMD;
  if (name == "CIMSS") return Source::CIMSS;
  if (name == "METHOD") return Source::METHOD;
  throw ConfigError("unknown track source '" + name + "' (expected IMD, CIMSS or METHOD)");
}

enum class Quality { Normal, Degraded };

inline const char* to_string(Quality q) {
  return q == Quality::Normal ? "normal" : "degraded";
}

/// One timestamped eye position. Timestamps are kept as the source text
/// (observation times are stored verbatim, not resampled); ISO-8601 strings
/// order correctly as text.
struct TrackPoint {
  std::string timestamp;
  geo::GeoPoint position;
  Source source = Source::METHOD;
  Quality quality = Quality::Normal;
  /// Index of the point whose eye seeded this point's focus grid, when the
  /// track was assembled by chained detection.
  std::optional<std::size_t> prior_index;
};

/// Time-ordered eye positions; timestamps strictly increasing.
struct Track {
  std::vector<TrackPoint> points;

  [[nodiscard]] std::size_t size() const { return points.size(); }

  void validate_ordering() const {
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1].timestamp < points[i].timestamp))
        throw OrderingError("track: timestamps not strictly increasing at index " +
                            std::to_string(i) + " ('" + points[i - 1].timestamp +
                            "' then '" + points[i].timestamp + "')");
  }
};

/// A located eye at one observation time, ready for track assembly.
struct LocatedEye {
  std::string timestamp;
  geo::GeoPoint position;
  Quality quality = Quality::Normal;
};

/// Chains located eyes into a METHOD-source track. Each point records the
/// previous point as its prior-center link: the eye at time t seeds the
/// focus grid at t+1.
inline Track assemble_track(const std::vector<LocatedEye>& located) {
  if (located.empty()) throw ArgumentError("assemble_track: needs at least one location");
  Track track;
  for (std::size_t i = 0; i < located.size(); ++i) {
    TrackPoint point;
    point.timestamp = located[i].timestamp;
    point.position = geo::validated(located[i].position);
    point.source = Source::METHOD;
    point.quality = located[i].quality;
    if (i > 0) point.prior_index = i - 1;
    track.points.push_back(std::move(point));
  }
  track.validate_ordering();
  return track;
}

}  // namespace stormeye::track
