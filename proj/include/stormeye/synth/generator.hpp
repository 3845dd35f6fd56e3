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
#include <cstdint>
#include <ctime>
#include <random>
#include <string>
#include <vector>

#include "stormeye/geo/focus_grid.hpp"
#include "stormeye/image/image.hpp"
#include "stormeye/locate/observations.hpp"
#include "stormeye/storm/crisp_inputs.hpp"

namespace stormeye::synth {

/// Tuning knobs for generated test scenes. The scene is a bright,
/// soft-edged disc (the eyewall region) over low uniform background noise,
/// with a sprinkle of isolated bright salt pixels that opening must remove.
struct SynthOptions {
  std::uint64_t seed = 1;
  geo::GeoPoint first_center{15.0, 72.6};
  int frames = 1;
  double degrees_per_pixel = 0.01;
  double disc_radius_lo = 0.12;   // degrees
  double disc_radius_hi = 0.22;   // degrees
  double edge_sigma = 0.03;       // degrees; Gaussian falloff outside the disc
  int background_max = 60;        // uniform noise ceiling, well below cloud tops
  int salt_count = 400;           // isolated bright pixels per frame
  double drift_lat = 0.25;        // per-frame truth motion, degrees
  double drift_lon = 0.10;
  std::string first_timestamp_utc = "2021-05-14T00:00Z";  // advances 6-hourly
};

/// The meteorological inputs planted in the truth block; judged "present"
/// with a comfortable margin by both the default and calibrated configs.
inline storm::CrispInputs favorable_inputs() { return {75.0, 120.0, 37.5, 923.0}; }

struct SynthFrame {
  std::string timestamp;
  geo::GeoPoint grid_center;  // box the frame spans
  geo::GeoPoint truth;        // actual eye position
  int truth_row = 0, truth_col = 0;
  double disc_radius = 0.0;
  img::GrayImage frame{1, 1};
  std::vector<locate::BlockObservation> fields;
};

struct SynthBundle {
  SynthOptions options;
  std::vector<SynthFrame> frames;
};

namespace detail {

inline std::string advance_6h(const std::string& iso_utc, int steps) {
  std::tm tm{};
  if (std::sscanf(iso_utc.c_str(), "%4d-%2d-%2dT%2d:%2dZ", &tm.tm_year, &tm.tm_mon,
                  &tm.tm_mday, &tm.tm_hour, &tm.tm_min) != 5)
    throw ArgumentError("bad timestamp '" + iso_utc + "' (want YYYY-MM-DDTHH:MMZ)");
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  std::time_t t = timegm(&tm);
  t += static_cast<std::time_t>(steps) * 6 * 3600;
  std::tm out{};
  gmtime_r(&t, &out);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02dZ", out.tm_year + 1900,
                out.tm_mon + 1, out.tm_mday, out.tm_hour, out.tm_min);
  return buf;
}

inline std::pair<int, int> block_of(const geo::FocusGrid& grid, const geo::GeoPoint& p) {
  const geo::CellBounds e = grid.extent();
  const int row = 1 + static_cast<int>(std::floor((e.north - p.lat) /
                                                  geo::FocusGrid::kCellDegrees));
  const int col = 1 + static_cast<int>(std::floor((p.lon - e.west) /
                                                  geo::FocusGrid::kCellDegrees));
  geo::FocusGrid::check_index(row, col);
  return {row, col};
}

}  // namespace detail

/// Renders one scene: uniform background noise, then the disc, then salt.
/// Noise and salt draw from RNGs seeded only by noise_seed, so two scenes
/// with the same seed and different truth positions differ only in the disc.
inline img::GrayImage render_scene(const geo::FocusGrid& grid, const geo::GeoPoint& truth,
                                   double disc_radius, const SynthOptions& opt,
                                   std::uint64_t noise_seed) {
  const geo::CellBounds e = grid.extent();
  const int side = static_cast<int>(std::lround(geo::FocusGrid::kExtentDegrees /
                                                opt.degrees_per_pixel));
  img::GrayImage frame(side, side);

  std::mt19937_64 noise_rng(noise_seed);
  std::uniform_int_distribution<int> noise(0, opt.background_max);
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x)
      frame.set(x, y, static_cast<std::uint8_t>(noise(noise_rng)));

  // Disc overlay. Pixel centers: lon = west + (x + 0.5) * dpp (0-based x).
  const double dpp = opt.degrees_per_pixel;
  const double reach = disc_radius + 4.0 * opt.edge_sigma;
  const int x_lo = std::max(0, static_cast<int>((truth.lon - reach - e.west) / dpp) - 1);
  const int x_hi = std::min(side - 1, static_cast<int>((truth.lon + reach - e.west) / dpp) + 1);
  const int y_lo = std::max(0, static_cast<int>((e.north - truth.lat - reach) / dpp) - 1);
  const int y_hi = std::min(side - 1, static_cast<int>((e.north - truth.lat + reach) / dpp) + 1);
  for (int y = y_lo; y <= y_hi; ++y) {
    const double lat = e.north - (y + 0.5) * dpp;
    for (int x = x_lo; x <= x_hi; ++x) {
      const double lon = e.west + (x + 0.5) * dpp;
      const double d = std::hypot(lat - truth.lat, lon - truth.lon);
      double value = 0.0;
      if (d <= disc_radius) {
        value = 255.0;
      } else if (d <= reach) {
        const double out = d - disc_radius;
        value = 255.0 * std::exp(-(out * out) / (2.0 * opt.edge_sigma * opt.edge_sigma));
      }
      const auto v = static_cast<std::uint8_t>(std::lround(value));
      if (v > frame.at(x, y)) frame.set(x, y, v);
    }
  }

  // Salt: isolated bright pixels away from the disc and from each other, so
  // a 3x3 opening removes every one of them.
  std::mt19937_64 salt_rng(noise_seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> coord(0, side - 1);
  std::vector<std::pair<int, int>> placed;
  const double clearance = reach + 3.0 * dpp;
  int attempts = 0;
  while (static_cast<int>(placed.size()) < opt.salt_count && attempts < opt.salt_count * 20) {
    ++attempts;
    const int x = coord(salt_rng);
    const int y = coord(salt_rng);
    const double lon = e.west + (x + 0.5) * dpp;
    const double lat = e.north - (y + 0.5) * dpp;
    if (std::hypot(lat - truth.lat, lon - truth.lon) < clearance) continue;
    bool crowded = false;
    for (const auto& [px, py] : placed)
      if (std::abs(px - x) <= 2 && std::abs(py - y) <= 2) crowded = true;
    if (crowded) continue;
    placed.emplace_back(x, y);
    frame.set(x, y, 255);
  }
  return frame;
}

/// All 225 block observations: favorable inputs in the truth block, clearly
/// eye-absent fields (moisture low enough that only the moisture-low rule
/// fires) everywhere else.
inline std::vector<locate::BlockObservation> render_fields(int truth_row, int truth_col,
                                                           std::uint64_t fields_seed) {
  std::mt19937_64 rng(fields_seed);
  std::uniform_real_distribution<double> moisture(3.0, 14.0);
  std::uniform_real_distribution<double> wind(25.0, 60.0);
  std::uniform_real_distribution<double> drop(2.0, 20.0);
  std::uniform_real_distribution<double> pressure(960.0, 995.0);
  std::vector<locate::BlockObservation> fields;
  for (int row = 1; row <= geo::FocusGrid::kBlocksPerSide; ++row) {
    for (int col = 1; col <= geo::FocusGrid::kBlocksPerSide; ++col) {
      if (row == truth_row && col == truth_col) {
        fields.emplace_back(row, col, favorable_inputs());
      } else {
        fields.emplace_back(row, col, storm::CrispInputs{moisture(rng), wind(rng),
                                                         drop(rng), pressure(rng)});
      }
    }
  }
  return fields;
}

/// Generates a reproducible multi-frame bundle. Frame 0 is gridded on
/// first_center; each following frame is gridded on the previous frame's
/// truth, mirroring how tracking chains prior centers. The truth point
/// drifts by (drift_lat, drift_lon) per frame.
inline SynthBundle generate_bundle(const SynthOptions& opt) {
  if (opt.frames < 1) throw ArgumentError("generate_bundle: needs at least one frame");
  SynthBundle bundle;
  bundle.options = opt;

  std::mt19937_64 layout_rng(opt.seed);
  std::uniform_int_distribution<int> block_pick(5, 11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> radius(opt.disc_radius_lo, opt.disc_radius_hi);

  geo::GeoPoint grid_center = opt.first_center;
  geo::GeoPoint truth;
  for (int t = 0; t < opt.frames; ++t) {
    SynthFrame frame;
    frame.timestamp = detail::advance_6h(opt.first_timestamp_utc, t);
    frame.grid_center = grid_center;
    const geo::FocusGrid grid(grid_center);

    if (t == 0) {
      const int row = block_pick(layout_rng);
      const int col = block_pick(layout_rng);
      const geo::CellBounds cell = grid.cell_bounds(row, col);
      const double margin = 0.18;
      truth = geo::GeoPoint{
          cell.south + margin + unit(layout_rng) * (cell.north - cell.south - 2 * margin),
          cell.west + margin + unit(layout_rng) * (cell.east - cell.west - 2 * margin)};
    } else {
      truth = geo::GeoPoint{truth.lat + opt.drift_lat, truth.lon + opt.drift_lon};
    }
    const auto [row, col] = detail::block_of(grid, truth);
    frame.truth = truth;
    frame.truth_row = row;
    frame.truth_col = col;
    frame.disc_radius = radius(layout_rng);
    frame.frame = render_scene(grid, truth, frame.disc_radius, opt,
                               opt.seed * 1000003ULL + static_cast<std::uint64_t>(t));
    frame.fields = render_fields(row, col,
                                 opt.seed * 7778777ULL + static_cast<std::uint64_t>(t));
    bundle.frames.push_back(std::move(frame));

    grid_center = truth;  // next frame's grid follows the storm
  }
  return bundle;
}

}  // namespace stormeye::synth
