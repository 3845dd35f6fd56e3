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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stormeye/fuzzy/engine.hpp"
#include "support/oracles.hpp"

using namespace stormeye;
using fuzzy::AggregatedFuzzySet;
using fuzzy::Defuzzifier;
using fuzzy::InferenceSystem;
using fuzzy::LinguisticVariable;
using fuzzy::MembershipFunction;
using fuzzy::Rule;

namespace {

// Tiny one-input, one-output system used throughout.
InferenceSystem make_system(int sample_count = InferenceSystem::kDefaultSampleCount,
                            std::vector<Rule> rules = {}) {
  std::vector<LinguisticVariable> inputs{LinguisticVariable(
      "in", 0.0, 10.0, "",
      {MembershipFunction::trapezoidal("lo", 0, 0, 4, 6),
       MembershipFunction::trapezoidal("hi", 4, 6, 10, 10)})};
  LinguisticVariable output(
      "out", 0.0, 1.0, "",
      {MembershipFunction::trapezoidal("small", 0, 0, 0.3, 0.5),
       MembershipFunction::trapezoidal("large", 0.5, 0.7, 1, 1)});
  if (rules.empty())
    rules = {Rule{{{"in", "lo"}}, {"out", "small"}}, Rule{{{"in", "hi"}}, {"out", "large"}}};
  return InferenceSystem(std::move(inputs), std::move(output), std::move(rules),
                         sample_count);
}

AggregatedFuzzySet constant_set(double lo, double hi, int n, double value) {
  return AggregatedFuzzySet(lo, hi, std::vector<double>(static_cast<std::size_t>(n), value));
}

}  // namespace

TEST_CASE("a rule firing at 1 passes its consequent through unchanged") {
  const auto sys = make_system();
  const auto result = sys.evaluate({{"in", 0.0}});  // lo saturates at 1
  REQUIRE(result.strengths.size() == 2);
  CHECK(result.strengths[0] == 1.0);
  CHECK(result.strengths[1] == 0.0);
  const auto& agg = result.aggregated.samples();
  const auto& small = sys.output().term("small");
  for (std::size_t i = 0; i < agg.size(); ++i)
    REQUIRE(agg[i] == small.grade(result.aggregated.x_at(i)));
}

TEST_CASE("no firing yields an all-zero set and defuzzify refuses it") {
  // Custom rule base where only 'hi' maps anywhere; x=0 has hi degree 0.
  const auto sys = make_system(InferenceSystem::kDefaultSampleCount,
                               {Rule{{{"in", "hi"}}, {"out", "large"}}});
  const auto result = sys.evaluate({{"in", 0.0}});
  CHECK(result.aggregated.all_zero());
  CHECK(result.fired().empty());
  CHECK_THROWS_AS(fuzzy::defuzzify(result.aggregated, Defuzzifier::COA), NoRuleFired);
}

TEST_CASE("same consequent clipped twice aggregates to the higher clip") {
  // Two inputs whose membership is the identity ramp, both driving the same
  // consequent: strengths 0.3 and 0.7, so the max-aggregate must equal the
  // 0.7 clip alone.
  std::vector<LinguisticVariable> inputs{
      LinguisticVariable("a", 0.0, 1.0, "",
                         {MembershipFunction::trapezoidal("on", 0, 1, 1, 1)}),
      LinguisticVariable("b", 0.0, 1.0, "",
                         {MembershipFunction::trapezoidal("on", 0, 1, 1, 1)})};
  LinguisticVariable output("out", 0.0, 1.0, "",
                            {MembershipFunction::triangular("peak", 0, 0.5, 1)});
  InferenceSystem sys2(inputs, output,
                       {Rule{{{"a", "on"}}, {"out", "peak"}},
                        Rule{{{"b", "on"}}, {"out", "peak"}}});
  const auto res = sys2.evaluate({{"a", 0.3}, {"b", 0.7}});
  CHECK(res.strengths[0] == Catch::Approx(0.3));
  CHECK(res.strengths[1] == Catch::Approx(0.7));
  const auto& peak = output.term("peak");
  for (std::size_t i = 0; i < res.aggregated.sample_count(); ++i) {
    const double expected = std::min(0.7, peak.grade(res.aggregated.x_at(i)));
    REQUIRE(res.aggregated.samples()[i] == Catch::Approx(expected).margin(1e-12));
  }
}

TEST_CASE("evaluate validates inputs and rule base") {
  const auto sys = make_system();
  CHECK_THROWS_AS(sys.evaluate({}), ConfigError);  // missing variable
  CHECK_THROWS_AS(make_system(1001, {Rule{{}, {"out", "small"}}}), ConfigError);
  CHECK_THROWS_AS(make_system(1001, {Rule{{{"in", "nope"}}, {"out", "small"}}}), ConfigError);
  CHECK_THROWS_AS(make_system(1001, {Rule{{{"in", "lo"}}, {"nope", "small"}}}), ConfigError);
  CHECK_THROWS_AS(
      make_system(1001, {Rule{{{"in", "lo"}, {"in", "hi"}}, {"out", "small"}}}),
      ConfigError);  // two antecedents on one variable
  CHECK_THROWS_AS(InferenceSystem({sys.inputs()}, sys.output(), {}), ConfigError);
}

TEST_CASE("out-of-range inputs clamp by default and throw in strict mode") {
  const auto lax = make_system();
  CHECK(lax.evaluate({{"in", -5.0}}).strengths[0] == 1.0);
  std::vector<LinguisticVariable> inputs{lax.inputs()};
  InferenceSystem strict(inputs, lax.output(),
                         {Rule{{{"in", "lo"}}, {"out", "small"}},
                          Rule{{{"in", "hi"}}, {"out", "large"}}},
                         InferenceSystem::kDefaultSampleCount, /*clamp=*/false);
  CHECK_THROWS_AS(strict.evaluate({{"in", -5.0}}), RangeError);
}

TEST_CASE("COA of a symmetric triangle is its apex") {
  const int n = 1001;
  std::vector<double> samples(n);
  const auto tri = MembershipFunction::triangular("t", 0.1, 0.5, 0.9);
  for (int i = 0; i < n; ++i) samples[static_cast<std::size_t>(i)] = tri.grade(i / 1000.0);
  const AggregatedFuzzySet set(0.0, 1.0, samples);
  CHECK(fuzzy::defuzzify(set, Defuzzifier::COA) == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("COA of a rectangle is its midpoint") {
  const int n = 1001;
  std::vector<double> samples(n, 0.0);
  for (int i = 200; i <= 600; ++i) samples[static_cast<std::size_t>(i)] = 0.6;
  const AggregatedFuzzySet set(0.0, 1.0, samples);
  CHECK(fuzzy::defuzzify(set, Defuzzifier::COA) == Catch::Approx(0.4).margin(1e-12));
}

TEST_CASE("COA of a clipped asymmetric triangle matches the integration oracle") {
  // triangle(0.1, 0.3, 0.9) clipped at 0.5; kinks at 0.2 and 0.6 sit on the
  // 1001-point grid, and the exact center of area is 41/90.
  const auto tri = MembershipFunction::triangular("t", 0.1, 0.3, 0.9);
  const auto clipped = [&](double x) { return std::min(0.5, tri.grade(x)); };

  const int n = 1001;
  std::vector<double> samples(n);
  for (int i = 0; i < n; ++i) samples[static_cast<std::size_t>(i)] = clipped(i / 1000.0);
  const double computed = fuzzy::defuzzify(AggregatedFuzzySet(0.0, 1.0, samples),
                                           Defuzzifier::COA);

  const double oracle = oracles::coa_trapezoid(clipped, 0.0, 1.0, 10 * (n - 1) + 1);
  CHECK(computed == Catch::Approx(oracle).margin(1e-6));
  CHECK(computed == Catch::Approx(0.4555555555555549).margin(1e-12));  // frozen
  CHECK(computed == Catch::Approx(41.0 / 90.0).margin(1e-9));
}

TEST_CASE("maxima defuzzifiers agree on plateau edges and mean") {
  const auto tri = MembershipFunction::triangular("t", 0.1, 0.3, 0.9);
  const int n = 1001;
  std::vector<double> samples(n);
  for (int i = 0; i < n; ++i)
    samples[static_cast<std::size_t>(i)] = std::min(0.5, tri.grade(i / 1000.0));
  const AggregatedFuzzySet set(0.0, 1.0, samples);
  // Plateau runs from 0.2 to 0.6.
  CHECK(fuzzy::defuzzify(set, Defuzzifier::SOM) == Catch::Approx(0.2).margin(1e-12));
  CHECK(fuzzy::defuzzify(set, Defuzzifier::LOM) == Catch::Approx(0.6).margin(1e-12));
  CHECK(fuzzy::defuzzify(set, Defuzzifier::MOM) == Catch::Approx(0.4).margin(1e-9));
}

TEST_CASE("MOM treats near-ties within 1e-9 as maximal") {
  std::vector<double> samples(101, 0.0);
  samples[20] = 0.5;
  samples[80] = 0.5 - 1e-10;  // inside the tie tolerance
  const AggregatedFuzzySet set(0.0, 1.0, samples);
  CHECK(fuzzy::defuzzify(set, Defuzzifier::MOM) == Catch::Approx(0.5).margin(1e-9));
  CHECK(fuzzy::defuzzify(set, Defuzzifier::SOM) == Catch::Approx(0.2).margin(1e-12));
  CHECK(fuzzy::defuzzify(set, Defuzzifier::LOM) == Catch::Approx(0.8).margin(1e-12));
}

TEST_CASE("SOM <= MOM <= LOM on random sets") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> samples(201);
    for (auto& s : samples) s = u(rng);
    const AggregatedFuzzySet set(0.0, 1.0, samples);
    const double som = fuzzy::defuzzify(set, Defuzzifier::SOM);
    const double mom = fuzzy::defuzzify(set, Defuzzifier::MOM);
    const double lom = fuzzy::defuzzify(set, Defuzzifier::LOM);
    CHECK(som <= mom);
    CHECK(mom <= lom);
    const double coa = fuzzy::defuzzify(set, Defuzzifier::COA);
    CHECK(coa >= set.lo());
    CHECK(coa <= set.hi());
  }
}

TEST_CASE("COA is invariant under uniform rescaling of the samples") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> samples(501);
  for (auto& s : samples) s = u(rng) * 0.5;
  const AggregatedFuzzySet base(0.0, 1.0, samples);
  const double reference = fuzzy::defuzzify(base, Defuzzifier::COA);

  for (const double k : {0.25, 0.5, 2.0}) {  // powers of two rescale exactly
    std::vector<double> scaled(samples);
    for (auto& s : scaled) s *= k;
    CHECK(fuzzy::defuzzify(AggregatedFuzzySet(0.0, 1.0, scaled), Defuzzifier::COA) ==
          reference);
  }
  std::vector<double> scaled(samples);
  for (auto& s : scaled) s *= 0.3;
  CHECK(fuzzy::defuzzify(AggregatedFuzzySet(0.0, 1.0, scaled), Defuzzifier::COA) ==
        Catch::Approx(reference).margin(1e-12));
}

TEST_CASE("aggregate dominates every clipped consequent and stays within [0,1]") {
  const auto sys = make_system();
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = u(rng);
    const auto res = sys.evaluate({{"in", x}});
    for (std::size_t r = 0; r < sys.rules().size(); ++r) {
      const auto& term = sys.output().term(sys.rules()[r].consequent.second);
      for (std::size_t i = 0; i < res.aggregated.sample_count(); ++i) {
        const double clipped =
            std::min(res.strengths[r], term.grade(res.aggregated.x_at(i)));
        REQUIRE(res.aggregated.samples()[i] >= clipped);
        REQUIRE(res.aggregated.samples()[i] <= 1.0);
      }
    }
  }
}

TEST_CASE("doubling the sample count moves COA by less than 1e-4") {
  // Random piecewise-linear sets: the max of up to three clipped random
  // trapezoids, none clipped into a near-zero sliver.
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  std::uniform_real_distribution<double> clip(0.1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    struct Piece {
      MembershipFunction mf;
      double clip;
    };
    std::vector<Piece> pieces;
    const int count = 1 + trial % 3;
    for (int p = 0; p < count; ++p) {
      double pts[4] = {pos(rng), pos(rng), pos(rng), pos(rng)};
      std::sort(pts, pts + 4);
      for (int k = 1; k < 4; ++k)  // keep slopes finite and moderate
        pts[k] = std::min(1.0, std::max(pts[k], pts[k - 1] + 0.02));
      pieces.push_back(
          {MembershipFunction::trapezoidal("p", pts[0], pts[1], pts[2], pts[3]),
           clip(rng)});
    }
    const auto mu = [&](double x) {
      double best = 0.0;
      for (const auto& piece : pieces)
        best = std::max(best, std::min(piece.clip, piece.mf.grade(x)));
      return best;
    };
    const auto sample_coa = [&](int n) {
      std::vector<double> samples(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        samples[static_cast<std::size_t>(i)] = mu(static_cast<double>(i) / (n - 1));
      return fuzzy::defuzzify(AggregatedFuzzySet(0.0, 1.0, samples), Defuzzifier::COA);
    };
    REQUIRE(std::abs(sample_coa(1001) - sample_coa(2001)) < 1e-4);
  }
}

TEST_CASE("aggregated set shape invariants") {
  CHECK_THROWS_AS(constant_set(0.0, 1.0, 1, 0.0), ConfigError);   // too few samples
  CHECK_THROWS_AS(constant_set(1.0, 1.0, 10, 0.0), ConfigError);  // empty universe
  CHECK_THROWS_AS(constant_set(0.0, 1.0, 10, 1.5), ConfigError);  // out of range
  const auto set = constant_set(2.0, 4.0, 11, 0.5);
  CHECK(set.x_at(0) == 2.0);
  CHECK(set.x_at(10) == 4.0);
}
