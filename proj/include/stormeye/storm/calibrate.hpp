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
#include <optional>
#include <string>
#include <vector>

#include "stormeye/fuzzy/config_io.hpp"
#include "stormeye/storm/crisp_inputs.hpp"
#include "stormeye/storm/storm_fis.hpp"

namespace stormeye::storm {

/// One tunable breakpoint: a declared point of one term, with move bounds.
struct CalibrationParameter {
  std::string variable;
  std::string term;
  int point_index = 0;  // index into the declared breakpoint list
  double lower = 0.0;
  double upper = 0.0;
};

struct CalibrationOptions {
  CrispInputs anchor{75.0, 120.0, 37.5, 923.0};  // the single worked-example anchor
  double target = 0.703;
  double tolerance = 0.05;           // report failure above this residual
  double bound_fraction = 0.15;      // max move, as a fraction of the universe span
  double initial_step_fraction = 0.05;
  double min_step_fraction = 1e-7;
  int max_passes = 200;
};

/// Not an exception: a residual above tolerance is reported, not thrown, so
/// the CLI can map it to its own exit code.
struct CalibrationReport {
  fuzzy::FisDefinition definition;
  double initial_residual = 0.0;
  double final_residual = 0.0;
  double achieved_crisp = 0.0;
  int accepted_moves = 0;
  int passes = 0;
  bool within_tolerance = false;
};

namespace detail {

/// The documented parameter list: every declared breakpoint of every term
/// (inputs first, then the output; terms and points in declaration order)
/// that is not pinned to a universe endpoint. Bounds are the starting value
/// plus/minus bound_fraction of the universe span, clipped to the universe.
inline std::vector<CalibrationParameter> parameter_list(const fuzzy::FisDefinition& def,
                                                        double bound_fraction) {
  std::vector<CalibrationParameter> params;
  auto scan = [&](const fuzzy::LinguisticVariable& var) {
    const double span = var.hi() - var.lo();
    for (const auto& term : var.terms()) {
      const auto pts = term.breakpoints();
      for (int p = 0; p < term.breakpoint_count(); ++p) {
        const double value = pts[static_cast<std::size_t>(p)];
        if (value == var.lo() || value == var.hi()) continue;  // pinned shoulder point
        CalibrationParameter param;
        param.variable = var.name();
        param.term = term.label();
        param.point_index = p;
        param.lower = std::max(var.lo(), value - bound_fraction * span);
        param.upper = std::min(var.hi(), value + bound_fraction * span);
        params.push_back(param);
      }
    }
  };
  for (const auto& v : def.inputs) scan(v);
  for (const auto& v : def.output) scan(v);
  return params;
}

inline std::optional<double> try_residual(const fuzzy::FisDefinition& def,
                                          const CalibrationOptions& opt) {
  try {
    StormFis fis(def);
    return std::abs(fis.judge(opt.anchor).crisp - opt.target);
  } catch (const Error&) {
    return std::nullopt;  // move produced an invalid definition; caller rejects it
  }
}

/// Definition with one declared breakpoint moved, or nothing when the move
/// breaks breakpoint ordering.
inline std::optional<fuzzy::FisDefinition> moved(const fuzzy::FisDefinition& def,
                                                 const CalibrationParameter& param,
                                                 double value) {
  fuzzy::FisDefinition candidate = def;
  auto& var = candidate.variable(param.variable);
  const auto& term = var.term(param.term);
  try {
    var.replace_term(term.with_breakpoint(param.point_index, value));
  } catch (const Error&) {
    return std::nullopt;
  }
  return candidate;
}

}  // namespace detail

/// Coordinate descent on membership-function breakpoints, minimizing the
/// distance between the anchor's crisp output and the target. The parameter
/// list and its bounds are fixed up front (see detail::parameter_list);
/// parameters are visited in list order with a halving step schedule, so the
/// result is deterministic. Moves that worsen the residual or invalidate the
/// definition (ordering, coverage, rule checks) are rejected.
inline CalibrationReport calibrate(const fuzzy::FisDefinition& start,
                                   const CalibrationOptions& opt = {}) {
  CalibrationReport report;
  report.definition = start;

  const auto initial = detail::try_residual(start, opt);
  if (!initial) throw ConfigError("calibrate: starting definition is not a valid storm FIS");
  report.initial_residual = *initial;

  const auto params = detail::parameter_list(start, opt.bound_fraction);
  std::vector<double> values(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& var = report.definition.variable(params[i].variable);
    values[i] = var.term(params[i].term)
                    .breakpoints()[static_cast<std::size_t>(params[i].point_index)];
  }

  double best = *initial;
  double step_fraction = opt.initial_step_fraction;
  while (step_fraction >= opt.min_step_fraction && report.passes < opt.max_passes &&
         best > 0.0) {
    bool improved_this_pass = false;
    ++report.passes;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const auto& var = report.definition.variable(params[i].variable);
      const double step = (var.hi() - var.lo()) * step_fraction;
      for (const double direction : {+1.0, -1.0}) {
        const double candidate_value =
            std::clamp(values[i] + direction * step, params[i].lower, params[i].upper);
        if (candidate_value == values[i]) continue;
        const auto candidate = detail::moved(report.definition, params[i], candidate_value);
        if (!candidate) continue;
        const auto residual = detail::try_residual(*candidate, opt);
        if (residual && *residual < best) {
          best = *residual;
          report.definition = *candidate;
          values[i] = candidate_value;
          ++report.accepted_moves;
          improved_this_pass = true;
          break;  // keep scanning remaining parameters at this step size
        }
      }
    }
    if (!improved_this_pass) step_fraction *= 0.5;
  }

  report.final_residual = best;
  StormFis calibrated(report.definition);
  report.achieved_crisp = calibrated.judge(opt.anchor).crisp;
  report.within_tolerance = report.final_residual <= opt.tolerance;
  return report;
}

}  // namespace stormeye::storm
