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

// stormeye CLI: storm-eye detection from gridded fields + IR frames.
//
// Subcommands: fis-eval, detect, track, compare, synth, calibrate.
// Exit codes: 0 success, 1 I/O or data error, 2 usage/config error,
//             3 eye absent, 4 calibration failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stormeye/stormeye.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAbsent = 3;
constexpr int kExitCalibration = 4;

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace stormeye;

// ---------------------------------------------------------------------------
// Run configuration: defaults, JSON override file, per-command flags.

struct RunConfig {
  std::string fis_config;  // empty: built-in default definition
  img::Threshold threshold = img::Threshold::otsu();
  int se_radius = 1;
  double presence_threshold = storm::kDefaultPresenceThreshold;
  int crop_margin = 1;
  int sample_count = fuzzy::InferenceSystem::kDefaultSampleCount;
  bool debug_images = false;
  std::string debug_dir = ".";

  void validate() const {
    if (se_radius < 1) throw ConfigError("run config: se_radius must be >= 1");
    if (crop_margin < 0) throw ConfigError("run config: crop_margin must be >= 0");
    if (sample_count < 2) throw ConfigError("run config: sample_count must be >= 2");
    if (presence_threshold < 0.0 || presence_threshold > 1.0)
      throw ConfigError("run config: presence_threshold must be in [0,1]");
  }
};

img::Threshold parse_threshold_json(const nlohmann::json& j) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "method" && key != "value")
      throw ConfigError("run config: unknown threshold key '" + key + "'");
  }
  const std::string method = j.at("method").get<std::string>();
  if (method == "otsu") return img::Threshold::otsu();
  if (method == "fixed") return img::Threshold::fixed(j.at("value").get<int>());
  throw ConfigError("run config: unknown threshold method '" + method + "'");
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open run config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse run config " + path + ": " + e.what());
  }
  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "fis_config") cfg.fis_config = value.get<std::string>();
    else if (key == "threshold") cfg.threshold = parse_threshold_json(value);
    else if (key == "se_radius") cfg.se_radius = value.get<int>();
    else if (key == "presence_threshold") cfg.presence_threshold = value.get<double>();
    else if (key == "crop_margin") cfg.crop_margin = value.get<int>();
    else if (key == "sample_count") cfg.sample_count = value.get<int>();
    else if (key == "debug_images") cfg.debug_images = value.get<bool>();
    else if (key == "debug_dir") cfg.debug_dir = value.get<std::string>();
    else throw ConfigError("run config: unknown key '" + key + "'");
  }
  return cfg;
}

storm::StormFis build_fis(const RunConfig& cfg) {
  fuzzy::FisDefinition def =
      cfg.fis_config.empty() ? storm::default_definition() : fuzzy::load_fis(cfg.fis_config);
  def.sample_count = cfg.sample_count;
  return storm::StormFis(def, cfg.presence_threshold);
}

locate::PipelineConfig pipeline_config(const RunConfig& cfg) {
  locate::PipelineConfig pc;
  pc.threshold = cfg.threshold;
  pc.se_radius = cfg.se_radius;
  pc.crop_margin_cells = cfg.crop_margin;
  pc.debug_images = cfg.debug_images;
  pc.debug_dir = cfg.debug_dir;
  return pc;
}

// ---------------------------------------------------------------------------
// Small parsers shared by several commands.

storm::CrispInputs parse_inputs(const std::string& spec) {
  std::map<std::string, double> kv;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw ArgumentError("--inputs: expected K=V, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      std::size_t used = 0;
      kv[key] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ArgumentError("--inputs: bad numeric value '" + value + "' for " + key);
    }
  }
  for (const char* key : {"D", "W", "PD", "EP"})
    if (!kv.contains(key))
      throw ArgumentError(std::string{"--inputs: missing "} + key +
                          " (want D=..,W=..,PD=..,EP=..)");
  if (kv.size() != 4) throw ArgumentError("--inputs: unexpected extra keys");
  return storm::CrispInputs{kv["D"], kv["W"], kv["PD"], kv["EP"]};
}

geo::GeoPoint parse_latlon(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw ArgumentError("expected 'lat,lon', got '" + spec + "'");
  try {
    std::size_t used = 0;
    const double lat = std::stod(spec.substr(0, comma), &used);
    const double lon = std::stod(spec.substr(comma + 1), &used);
    return geo::validated(geo::GeoPoint{lat, lon});
  } catch (const std::exception&) {
    throw ArgumentError("expected 'lat,lon', got '" + spec + "'");
  }
}

img::Threshold parse_threshold_flag(const std::string& spec) {
  if (spec == "otsu") return img::Threshold::otsu();
  try {
    std::size_t used = 0;
    const int level = std::stoi(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
    return img::Threshold::fixed(level);
  } catch (const std::exception&) {
    throw ArgumentError("--threshold: want 'otsu' or a level 0..255, got '" + spec + "'");
  }
}

ordered_json point_json(const geo::GeoPoint& p) {
  return ordered_json{{"lat", p.lat}, {"lon", p.lon}};
}

// ---------------------------------------------------------------------------
// fis-eval

int cmd_fis_eval(const RunConfig& cfg, const std::string& inputs_spec, bool as_json) {
  const storm::CrispInputs inputs = parse_inputs(inputs_spec);
  const storm::StormFis fis = build_fis(cfg);
  const storm::EyeVerdict verdict = fis.judge(inputs);

  if (as_json) {
    ordered_json j;
    j["inputs"] = {{"D", inputs.moisture_density},
                   {"W", inputs.wind_speed},
                   {"PD", inputs.pressure_drop},
                   {"EP", inputs.central_pressure}};
    j["crisp"] = verdict.crisp;
    j["present"] = verdict.present;
    j["strengths"] = verdict.all_strengths;
    j["fired"] = ordered_json::array();
    for (const auto& [rule, strength] : verdict.fired_rules)
      j["fired"].push_back({{"rule", rule}, {"strength", strength}});
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("crisp:   %.6f\n", verdict.crisp);
    std::printf("present: %s\n", verdict.present ? "true" : "false");
    std::printf("rules (firing strength):\n");
    for (std::size_t i = 0; i < verdict.all_strengths.size(); ++i)
      std::printf("  %2zu: %.6f\n", i + 1, verdict.all_strengths[i]);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// detect

int cmd_detect(const RunConfig& cfg, const std::string& image_path,
               const std::string& fields_path, const std::string& prior_spec, bool as_json) {
  const geo::GeoPoint prior = parse_latlon(prior_spec);
  const img::GrayImage frame = img::load_image(image_path);
  const auto fields = locate::load_fields(fields_path);
  const storm::StormFis fis = build_fis(cfg);

  const locate::LocateOutcome outcome =
      locate::locate_frame(prior, fields, frame, fis, pipeline_config(cfg));

  if (as_json) {
    ordered_json j;
    j["present"] = outcome.present();
    if (outcome.present()) {
      j["eye"] = point_json(outcome.eye->point);
      j["block"] = {{"row", outcome.block->row}, {"col", outcome.block->col}};
      j["crisp"] = outcome.block->verdict.crisp;
      j["degraded"] = outcome.eye->degraded;
    } else {
      j["eye"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
  } else if (outcome.present()) {
    std::printf("eye %.6f %.6f  block (%d,%d) crisp %.4f%s\n", outcome.eye->point.lat,
                outcome.eye->point.lon, outcome.block->row, outcome.block->col,
                outcome.block->verdict.crisp, outcome.eye->degraded ? "  [degraded]" : "");
  } else {
    std::printf("absent\n");
  }
  return outcome.present() ? kExitOk : kExitAbsent;
}

// ---------------------------------------------------------------------------
// track

struct ManifestEntry {
  std::string timestamp;
  std::string image;
  std::string fields;
  std::optional<geo::GeoPoint> prior_center;
};

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse manifest " + path + ": " + e.what());
  }
  if (!j.is_array() || j.empty())
    throw IoError("manifest must be a non-empty JSON array: " + path);
  const fs::path base = fs::path(path).parent_path();
  std::vector<ManifestEntry> entries;
  try {
    for (const auto& e : j) {
      ManifestEntry entry;
      entry.timestamp = e.at("timestamp").get<std::string>();
      entry.image = (base / e.at("image").get<std::string>()).string();
      entry.fields = (base / e.at("fields").get<std::string>()).string();
      if (e.contains("prior_center"))
        entry.prior_center = geo::GeoPoint{e["prior_center"].at("lat").get<double>(),
                                           e["prior_center"].at("lon").get<double>()};
      entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad manifest entry in " + path + ": " + e.what());
  }
  return entries;
}

int cmd_track(const RunConfig& cfg, const std::string& manifest_path,
              const std::string& out_prefix, const std::string& prior_spec, bool as_json) {
  const auto manifest = load_manifest(manifest_path);
  const storm::StormFis fis = build_fis(cfg);
  const locate::PipelineConfig pc = pipeline_config(cfg);

  std::optional<geo::GeoPoint> prior;
  if (!prior_spec.empty()) prior = parse_latlon(prior_spec);

  std::vector<track::LocatedEye> located;
  ordered_json frames = ordered_json::array();
  for (const auto& entry : manifest) {
    // Explicit manifest priors win; otherwise chain from the last located eye.
    if (entry.prior_center) prior = entry.prior_center;
    if (!prior)
      throw ArgumentError("track: first manifest entry needs a prior center (or pass "
                          "--prior-center)");
    const img::GrayImage frame = img::load_image(entry.image);
    const auto fields = locate::load_fields(entry.fields);
    const locate::LocateOutcome outcome = locate::locate_frame(*prior, fields, frame, fis, pc);

    ordered_json fj;
    fj["timestamp"] = entry.timestamp;
    fj["prior_center"] = point_json(*prior);
    fj["present"] = outcome.present();
    if (outcome.present()) {
      const bool degraded = outcome.eye->degraded;
      located.push_back({entry.timestamp, outcome.eye->point,
                         degraded ? track::Quality::Degraded : track::Quality::Normal});
      fj["eye"] = point_json(outcome.eye->point);
      fj["block"] = {{"row", outcome.block->row}, {"col", outcome.block->col}};
      fj["crisp"] = outcome.block->verdict.crisp;
      fj["degraded"] = degraded;
      prior = outcome.eye->point;  // seeds the next frame's grid
    } else {
      fj["eye"] = nullptr;
    }
    frames.push_back(std::move(fj));
    if (!as_json) {
      if (outcome.present())
        std::printf("%s  eye %.6f %.6f\n", entry.timestamp.c_str(),
                    outcome.eye->point.lat, outcome.eye->point.lon);
      else
        std::printf("%s  absent\n", entry.timestamp.c_str());
    }
  }

  if (located.empty()) {
    if (as_json)
      std::cout << ordered_json{{"frames", frames}, {"points", 0}}.dump(2) << '\n';
    else
      std::printf("no eye located in any frame\n");
    return kExitAbsent;
  }

  const track::Track assembled = track::assemble_track(located);
  track::write_track_csv(assembled, out_prefix + ".csv");
  track::write_track_geojson(assembled, out_prefix + ".geojson");

  if (as_json) {
    ordered_json j;
    j["frames"] = frames;
    j["points"] = assembled.size();
    j["csv"] = out_prefix + ".csv";
    j["geojson"] = out_prefix + ".geojson";
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("track: %zu point(s) -> %s.csv, %s.geojson\n", assembled.size(),
                out_prefix.c_str(), out_prefix.c_str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare

void write_pair_table(const track::ComparisonResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write comparison table: " + path);
  out << "ref_lat,ref_lon,cand_lat,cand_lon,err_lat_pct,err_lon_pct\n";
  char line[160];
  for (const auto& row : result.rows) {
    std::snprintf(line, sizeof line, "%.10g,%.10g,%.10g,%.10g,%.6f,%.6f\n",
                  row.reference.lat, row.reference.lon, row.candidate.lat,
                  row.candidate.lon, row.lat_err_pct, row.lon_err_pct);
    out << line;
  }
}

ordered_json summary_json(const track::ComparisonResult& result) {
  return ordered_json{{"rows", result.rows.size()},
                      {"mean_abs_lat_pct", result.mean_abs_lat_pct},
                      {"mean_abs_lon_pct", result.mean_abs_lon_pct},
                      {"max_abs_lat_pct", result.max_abs_lat_pct},
                      {"max_abs_lon_pct", result.max_abs_lon_pct}};
}

int cmd_compare_tracks(const std::string& ref_path, const std::string& cand_path,
                       const std::string& by, const std::string& out_path, bool as_json) {
  const track::Track reference = track::read_track_csv(ref_path);
  const track::Track candidate = track::read_track_csv(cand_path);
  track::MatchBy match;
  if (by == "row") match = track::MatchBy::Row;
  else if (by == "timestamp") match = track::MatchBy::Timestamp;
  else throw ArgumentError("--by: want 'row' or 'timestamp', got '" + by + "'");

  const track::ComparisonResult result = track::compare_tracks(reference, candidate, match);
  if (!out_path.empty()) write_pair_table(result, out_path);

  if (as_json) {
    ordered_json j = summary_json(result);
    j["errors"] = ordered_json::array();
    for (const auto& row : result.rows)
      j["errors"].push_back({{"ref", point_json(row.reference)},
                             {"cand", point_json(row.candidate)},
                             {"lat_err_pct", row.lat_err_pct},
                             {"lon_err_pct", row.lon_err_pct}});
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("rows: %zu  mean |lat%%| %.4f  mean |lon%%| %.4f  max |lat%%| %.4f  max "
                "|lon%%| %.4f\n",
                result.rows.size(), result.mean_abs_lat_pct, result.mean_abs_lon_pct,
                result.max_abs_lat_pct, result.max_abs_lon_pct);
  }
  return kExitOk;
}

int cmd_compare_fixture(const std::string& fixture_path, const std::string& out_path,
                        bool as_json) {
  const track::ComparisonFixture fixture = track::read_comparison_fixture(fixture_path);
  const track::Track imd = fixture.track(track::Source::IMD);
  const auto a = track::compare_tracks(imd, fixture.track(track::Source::CIMSS));
  const auto b = track::compare_tracks(imd, fixture.track(track::Source::METHOD));

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write comparison table: " + out_path);
    out << "imd_lat,imd_lon,cimss_lat,cimss_lon,proposed_lat,proposed_lon,"
           "err_a_lat,err_a_lon,err_b_lat,err_b_lon\n";
    char line[240];
    for (std::size_t i = 0; i < fixture.size(); ++i) {
      std::snprintf(line, sizeof line,
                    "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.6f,%.6f,%.6f,%.6f\n",
                    fixture.imd[i].lat, fixture.imd[i].lon, fixture.cimss[i].lat,
                    fixture.cimss[i].lon, fixture.proposed[i].lat, fixture.proposed[i].lon,
                    a.rows[i].lat_err_pct, a.rows[i].lon_err_pct, b.rows[i].lat_err_pct,
                    b.rows[i].lon_err_pct);
      out << line;
    }
  }

  if (as_json) {
    ordered_json j;
    j["rows"] = fixture.size();
    j["a"] = summary_json(a);
    j["b"] = summary_json(b);
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("rows: %zu\n", fixture.size());
    std::printf("A (vs CIMSS):  mean |lat%%| %.4f  mean |lon%%| %.4f\n", a.mean_abs_lat_pct,
                a.mean_abs_lon_pct);
    std::printf("B (vs method): mean |lat%%| %.4f  mean |lon%%| %.4f\n", b.mean_abs_lat_pct,
                b.mean_abs_lon_pct);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synth

int cmd_synth(std::uint64_t seed, int frames, double resolution, const std::string& format,
              const std::string& out_dir, const std::string& center_spec, bool as_json) {
  if (format != "png" && format != "pgm")
    throw ArgumentError("--format: want 'png' or 'pgm', got '" + format + "'");
  synth::SynthOptions opt;
  opt.seed = seed;
  opt.frames = frames;
  opt.degrees_per_pixel = resolution;
  if (!center_spec.empty()) opt.first_center = parse_latlon(center_spec);

  const synth::SynthBundle bundle = synth::generate_bundle(opt);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

  ordered_json manifest = ordered_json::array();
  ordered_json truth;
  truth["seed"] = opt.seed;
  truth["degrees_per_pixel"] = opt.degrees_per_pixel;
  truth["frames"] = ordered_json::array();

  char name[64];
  for (std::size_t i = 0; i < bundle.frames.size(); ++i) {
    const auto& f = bundle.frames[i];
    std::snprintf(name, sizeof name, "frame_%02zu.%s", i, format.c_str());
    const std::string image_name = name;
    std::snprintf(name, sizeof name, "fields_%02zu.json", i);
    const std::string fields_name = name;

    img::save_image(f.frame, out_dir + "/" + image_name);
    locate::save_fields(f.fields, out_dir + "/" + fields_name);

    ordered_json me;
    me["timestamp"] = f.timestamp;
    me["image"] = image_name;
    me["fields"] = fields_name;
    if (i == 0) me["prior_center"] = point_json(f.grid_center);
    manifest.push_back(std::move(me));

    ordered_json tf;
    tf["timestamp"] = f.timestamp;
    tf["truth"] = point_json(f.truth);
    tf["block"] = {{"row", f.truth_row}, {"col", f.truth_col}};
    tf["grid_center"] = point_json(f.grid_center);
    tf["disc_radius_deg"] = f.disc_radius;
    truth["frames"].push_back(std::move(tf));
  }

  {
    std::ofstream mo(out_dir + "/manifest.json");
    if (!mo) throw IoError("cannot write manifest in " + out_dir);
    mo << manifest.dump(2) << '\n';
    std::ofstream to(out_dir + "/truth.json");
    if (!to) throw IoError("cannot write truth file in " + out_dir);
    to << truth.dump(2) << '\n';
  }

  if (as_json) {
    ordered_json j;
    j["out_dir"] = out_dir;
    j["frames"] = bundle.frames.size();
    j["manifest"] = out_dir + "/manifest.json";
    j["truth"] = out_dir + "/truth.json";
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("wrote %zu frame(s) to %s (manifest.json, truth.json)\n",
                bundle.frames.size(), out_dir.c_str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// calibrate

int cmd_calibrate(const RunConfig& cfg, const std::string& out_path,
                  const std::string& anchor_spec, double target, double tolerance,
                  int max_passes, bool as_json) {
  fuzzy::FisDefinition def =
      cfg.fis_config.empty() ? storm::default_definition() : fuzzy::load_fis(cfg.fis_config);
  def.sample_count = cfg.sample_count;

  storm::CalibrationOptions opt;
  if (!anchor_spec.empty()) opt.anchor = parse_inputs(anchor_spec);
  opt.target = target;
  opt.tolerance = tolerance;
  opt.max_passes = max_passes;

  const storm::CalibrationReport report = storm::calibrate(def, opt);
  if (!out_path.empty()) fuzzy::save_fis(report.definition, out_path);

  if (as_json) {
    ordered_json j;
    j["initial_residual"] = report.initial_residual;
    j["final_residual"] = report.final_residual;
    j["achieved_crisp"] = report.achieved_crisp;
    j["accepted_moves"] = report.accepted_moves;
    j["passes"] = report.passes;
    j["within_tolerance"] = report.within_tolerance;
    if (!out_path.empty()) j["config"] = out_path;
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("initial residual: %.3e\n", report.initial_residual);
    std::printf("final residual:   %.3e\n", report.final_residual);
    std::printf("achieved crisp:   %.6f (target %.6f)\n", report.achieved_crisp, target);
    std::printf("accepted moves:   %d over %d pass(es)\n", report.accepted_moves,
                report.passes);
    if (!out_path.empty()) std::printf("wrote %s\n", out_path.c_str());
  }
  return report.within_tolerance ? kExitOk : kExitCalibration;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stormeye: tropical-cyclone eye location from gridded fields and IR frames"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string config_path;
  if (const char* env = std::getenv("CYCLONE_EYE_CONFIG")) config_path = env;
  app.add_option("--config", config_path,
                 "run-config JSON (default: $CYCLONE_EYE_CONFIG when set)");

  // Shared per-command option targets.
  std::string inputs_spec, image_path, fields_path, prior_spec, manifest_path;
  std::string fis_path, threshold_spec, debug_dir;
  std::string ref_path, cand_path, by = "row", fixture_path, out_path;
  std::string out_prefix = "track", synth_dir = "synth", synth_format = "png", center_spec;
  std::string anchor_spec;
  bool as_json = false, debug_images = false;
  int se_radius = -1, crop_margin = -1, sample_count = -1, frames = 1, max_passes = 200;
  double presence_threshold = -1.0, target = 0.703, tolerance = 0.05, resolution = 0.01;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool with_pipeline) {
    cmd->add_flag("--json", as_json, "machine-readable JSON on stdout");
    cmd->add_option("--fis", fis_path, "FIS definition JSON (default: built-in)");
    cmd->add_option("--sample-count", sample_count, "output discretization samples");
    if (with_pipeline) {
      cmd->add_option("--threshold", threshold_spec, "'otsu' or a fixed level 0..255");
      cmd->add_option("--se-radius", se_radius, "opening structuring-element radius");
      cmd->add_option("--crop-margin", crop_margin, "cells of margin around the block");
      cmd->add_option("--presence-threshold", presence_threshold,
                      "crisp cut-off for 'present'");
      cmd->add_flag("--debug-images", debug_images, "write crop/binary/denoised PNGs");
      cmd->add_option("--debug-dir", debug_dir, "directory for debug images");
    }
  };

  CLI::App* fis_eval = app.add_subcommand("fis-eval", "judge one crisp input tuple");
  fis_eval->add_option("--inputs", inputs_spec, "D=..,W=..,PD=..,EP=..")->required();
  add_common(fis_eval, false);
  fis_eval->add_option("--presence-threshold", presence_threshold,
                       "crisp cut-off for 'present'");

  CLI::App* detect = app.add_subcommand("detect", "locate the eye in one frame");
  detect->add_option("--image", image_path, "IR frame (PNG or PGM)")->required();
  detect->add_option("--fields", fields_path, "per-block fields JSON")->required();
  detect->add_option("--prior-center", prior_spec, "grid center as 'lat,lon'")->required();
  add_common(detect, true);

  CLI::App* track_cmd = app.add_subcommand("track", "chain detection over a frame manifest");
  track_cmd->add_option("--manifest", manifest_path, "frame manifest JSON")->required();
  track_cmd->add_option("--out", out_prefix, "output prefix (.csv/.geojson appended)");
  track_cmd->add_option("--prior-center", prior_spec,
                        "first-frame grid center when the manifest has none");
  add_common(track_cmd, true);

  CLI::App* compare = app.add_subcommand("compare", "error-percentage table of two tracks");
  compare->add_option("--reference", ref_path, "reference best-track CSV");
  compare->add_option("--candidate", cand_path, "candidate best-track CSV");
  compare->add_option("--by", by, "match 'row' or 'timestamp' (default row)");
  compare->add_option("--fixture", fixture_path,
                      "bundled three-agency fixture CSV (alternative mode)");
  compare->add_option("--out", out_path, "write the table CSV here");
  compare->add_flag("--json", as_json, "machine-readable JSON on stdout");

  CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic scene bundle");
  synth_cmd->add_option("--seed", seed, "RNG seed (bundles are byte-reproducible)");
  synth_cmd->add_option("--frames", frames, "number of 6-hourly frames");
  synth_cmd->add_option("--resolution", resolution, "degrees per pixel (default 0.01)");
  synth_cmd->add_option("--format", synth_format, "'png' or 'pgm'");
  synth_cmd->add_option("--center", center_spec, "first grid center as 'lat,lon'");
  synth_cmd->add_option("--out", synth_dir, "output directory");
  synth_cmd->add_flag("--json", as_json, "machine-readable JSON on stdout");

  CLI::App* calibrate = app.add_subcommand("calibrate", "fit breakpoints to the anchor");
  calibrate->add_option("--out", out_path, "write the calibrated FIS definition here");
  calibrate->add_option("--anchor", anchor_spec, "anchor inputs D=..,W=..,PD=..,EP=..");
  calibrate->add_option("--target", target, "target crisp output (default 0.703)");
  calibrate->add_option("--tolerance", tolerance, "acceptable residual (default 0.05)");
  calibrate->add_option("--max-passes", max_passes, "coordinate-descent pass budget");
  add_common(calibrate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_run_config(config_path);
    if (!fis_path.empty()) cfg.fis_config = fis_path;
    if (!threshold_spec.empty()) cfg.threshold = parse_threshold_flag(threshold_spec);
    if (se_radius >= 0) cfg.se_radius = se_radius;
    if (crop_margin >= 0) cfg.crop_margin = crop_margin;
    if (sample_count >= 0) cfg.sample_count = sample_count;
    if (presence_threshold >= 0.0) cfg.presence_threshold = presence_threshold;
    if (debug_images) cfg.debug_images = true;
    if (!debug_dir.empty()) cfg.debug_dir = debug_dir;
    cfg.validate();

    if (fis_eval->parsed()) return cmd_fis_eval(cfg, inputs_spec, as_json);
    if (detect->parsed()) return cmd_detect(cfg, image_path, fields_path, prior_spec, as_json);
    if (track_cmd->parsed())
      return cmd_track(cfg, manifest_path, out_prefix, prior_spec, as_json);
    if (compare->parsed()) {
      if (!fixture_path.empty()) return cmd_compare_fixture(fixture_path, out_path, as_json);
      if (ref_path.empty() || cand_path.empty())
        throw ArgumentError("compare: need --fixture, or both --reference and --candidate");
      return cmd_compare_tracks(ref_path, cand_path, by, out_path, as_json);
    }
    if (synth_cmd->parsed())
      return cmd_synth(seed, frames, resolution, synth_format, synth_dir, center_spec,
                       as_json);
    if (calibrate->parsed())
      return cmd_calibrate(cfg, out_path, anchor_spec, target, tolerance, max_passes,
                           as_json);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
