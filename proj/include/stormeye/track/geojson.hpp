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

#include <fstream>
#include <string>

#include <json.hpp>

#include "stormeye/errors.hpp"
#include "stormeye/track/track.hpp"

namespace stormeye::track {

/// Track as a GeoJSON FeatureCollection: one LineString feature for the
/// path, then one Point feature per track point carrying the per-point
/// properties (timestamp, quality). Coordinates are [lon, lat].
inline nlohmann::ordered_json track_to_geojson(const Track& track) {
  nlohmann::ordered_json root;
  root["type"] = "FeatureCollection";
  root["features"] = nlohmann::ordered_json::array();

  nlohmann::ordered_json line;
  line["type"] = "Feature";
  line["geometry"]["type"] = "LineString";
  line["geometry"]["coordinates"] = nlohmann::ordered_json::array();
  for (const auto& p : track.points)
    line["geometry"]["coordinates"].push_back({p.position.lon, p.position.lat});
  line["properties"]["source"] =
      track.points.empty() ? "METHOD" : to_string(track.points.front().source);
  line["properties"]["point_count"] = track.points.size();
  root["features"].push_back(line);

  for (const auto& p : track.points) {
    nlohmann::ordered_json point;
    point["type"] = "Feature";
    point["geometry"]["type"] = "Point";
    point["geometry"]["coordinates"] = {p.position.lon, p.position.lat};
    point["properties"]["timestamp"] = p.timestamp;
    point["properties"]["quality"] = to_string(p.quality);
    root["features"].push_back(point);
  }
  return root;
}

inline void write_track_geojson(const Track& track, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write GeoJSON file: " + path);
  out << track_to_geojson(track).dump(2) << '\n';
}

}  // namespace stormeye::track
