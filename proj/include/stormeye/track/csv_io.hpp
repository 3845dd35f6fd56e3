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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/track/track.hpp"

namespace stormeye::track {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    const auto begin = cell.find_first_not_of(" \t\r");
    const auto end = cell.find_last_not_of(" \t\r");
    cells.push_back(begin == std::string::npos ? std::string{}
                                               : cell.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline double parse_double(const std::string& cell, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw IoError("bad numeric cell '" + cell + "' in " + context);
  }
}

inline std::string format_degrees(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

/// Lines of a CSV file minus blank lines and '#' comments.
inline std::vector<std::string> data_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open CSV file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace detail

/// Best-track CSV: header `timestamp,lat,lon,source`, decimal degrees,
/// '#' comment lines allowed anywhere.
inline Track read_track_csv(const std::string& path) {
  const auto lines = detail::data_lines(path);
  if (lines.empty()) throw IoError("empty best-track CSV: " + path);
  const auto header = detail::split_csv_line(lines.front());
  if (header != std::vector<std::string>{"timestamp", "lat", "lon", "source"})
    throw IoError("best-track CSV header must be 'timestamp,lat,lon,source': " + path);
  Track track;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = detail::split_csv_line(lines[i]);
    if (cells.size() != 4)
      throw IoError("best-track CSV row with " + std::to_string(cells.size()) +
                    " cells (want 4) in " + path);
    TrackPoint point;
    point.timestamp = cells[0];
    point.position = geo::validated(geo::GeoPoint{detail::parse_double(cells[1], path),
                                                  detail::parse_double(cells[2], path)});
    point.source = source_from_string(cells[3]);
    track.points.push_back(std::move(point));
  }
  return track;
}

inline void write_track_csv(const Track& track, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write best-track CSV: " + path);
  out << "timestamp,lat,lon,source\n";
  for (const auto& p : track.points)
    out << p.timestamp << ',' << detail::format_degrees(p.position.lat) << ','
        << detail::format_degrees(p.position.lon) << ',' << to_string(p.source) << '\n';
}

/// A bundled three-agency comparison table: coordinates from the reference
/// agencies and the method, plus the error percentages as printed in the
/// source table (A: IMD vs CIMSS, B: IMD vs method).
struct ComparisonFixture {
  std::vector<geo::GeoPoint> imd;
  std::vector<geo::GeoPoint> cimss;
  std::vector<geo::GeoPoint> proposed;
  std::vector<double> printed_a_lat, printed_a_lon;
  std::vector<double> printed_b_lat, printed_b_lon;

  [[nodiscard]] std::size_t size() const { return imd.size(); }

  [[nodiscard]] Track track(Source source) const {
    const std::vector<geo::GeoPoint>* points = nullptr;
    switch (source) {
      case Source::IMD: points = &imd; break;
      case Source::CIMSS: points = &cimss; break;
      case Source::METHOD: points = &proposed; break;
    }
    Track t;
    for (std::size_t i = 0; i < points->size(); ++i) {
      TrackPoint p;
      // Tables carry no timestamps; rows are matched by order, so synthesize
      // sortable row ids.
      char id[8];
      std::snprintf(id, sizeof id, "r%02zu", i + 1);
      p.timestamp = id;
      p.position = (*points)[i];
      p.source = source;
      t.points.push_back(std::move(p));
    }
    return t;
  }
};

inline ComparisonFixture read_comparison_fixture(const std::string& path) {
  const auto lines = detail::data_lines(path);
  if (lines.empty()) throw IoError("empty fixture CSV: " + path);
  const auto header = detail::split_csv_line(lines.front());
  const std::vector<std::string> expected{
      "imd_lat", "imd_lon",     "cimss_lat", "cimss_lon", "proposed_lat",
      "proposed_lon", "err_a_lat", "err_a_lon", "err_b_lat", "err_b_lon"};
  if (header != expected)
    throw IoError("unexpected fixture CSV header in " + path);
  ComparisonFixture fixture;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = detail::split_csv_line(lines[i]);
    if (cells.size() != expected.size())
      throw IoError("fixture CSV row with " + std::to_string(cells.size()) +
                    " cells (want " + std::to_string(expected.size()) + ") in " + path);
    auto num = [&](std::size_t c) { return detail::parse_double(cells[c], path); };
    fixture.imd.push_back({num(0), num(1)});
    fixture.cimss.push_back({num(2), num(3)});
    fixture.proposed.push_back({num(4), num(5)});
    fixture.printed_a_lat.push_back(num(6));
    fixture.printed_a_lon.push_back(num(7));
    fixture.printed_b_lat.push_back(num(8));
    fixture.printed_b_lon.push_back(num(9));
  }
  return fixture;
}

}  // namespace stormeye::track
