// Copyright 2026 The ringcb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ringcb/evaluate.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace ringcb {
namespace {

TEST(WelchBoundTest, Values) {
  EXPECT_EQ(welch_bound(12, 12), 0.0);
  EXPECT_NEAR(welch_bound(64, 12), std::sqrt(52.0 / 756.0), 1e-15);
  EXPECT_NEAR(welch_bound(64, 12), 0.26226526415648105, 1e-15);
  EXPECT_NEAR(welch_bound(27, 6), std::sqrt(21.0 / 156.0), 1e-15);
  EXPECT_THROW(welch_bound(5, 6), std::invalid_argument);
  EXPECT_THROW(welch_bound(1, 1), std::invalid_argument);
}

// Frozen from an independent rational evaluation of (1/(q-1)) / I_w.
TEST(RatioFormulaTest, FrozenValues) {
  struct Row {
    std::uint64_t q;
    double c1;
    double c2;
  };
  const Row rows[] = {
      {3, 1.362770287738494, 1.457737973711325},
      {4, 1.270977818604485, 1.319371343004213},
      {9, 1.1165013848919998, 1.1241316092878093},
      {64, 1.0157451255991963, 1.015871047491164},
      {256, 1.0039138494465771, 1.0039215385909261},
  };
  for (const auto& r : rows) {
    EXPECT_NEAR(ratio_formula_c1(r.q), r.c1, 1e-12) << r.q;
    EXPECT_NEAR(ratio_formula_c2(r.q), r.c2, 1e-12) << r.q;
  }
  EXPECT_THROW(ratio_formula_c1(1), std::invalid_argument);
  EXPECT_THROW(ratio_formula_c2(0), std::invalid_argument);
}

TEST(RatioFormulaTest, DecreasesTowardOne) {
  const std::uint64_t qs[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 128, 256, 1024};
  for (std::size_t i = 1; i < std::size(qs); ++i) {
    EXPECT_LT(ratio_formula_c1(qs[i]), ratio_formula_c1(qs[i - 1]));
    EXPECT_LT(ratio_formula_c2(qs[i]), ratio_formula_c2(qs[i - 1]));
    EXPECT_GT(ratio_formula_c1(qs[i]), 1.0);
    EXPECT_GT(ratio_formula_c2(qs[i]), 1.0);
  }
  EXPECT_LT(ratio_formula_c1(1 << 20) - 1.0, 1e-5);
}

TEST(EvaluateTest, C1Q4) {
  const FieldSpec f = build_field(2, 2);
  const EvalReport r = evaluate(build_c1(f, {1}));
  EXPECT_EQ(r.n, 64u);
  EXPECT_EQ(r.k, 12u);
  EXPECT_EQ(r.pairs, 64u * 63u / 2u);
  EXPECT_NEAR(r.i_max, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.i_w, welch_bound(64, 12), 1e-15);
  EXPECT_NEAR(r.ratio, ratio_formula_c1(4), 1e-9);
  EXPECT_GT(r.i_max, r.i_w);
  EXPECT_LT(spectrum_deviation(r), 1e-9);
  EXPECT_FALSE(r.degenerate);
  std::uint64_t total = 0;
  for (const auto& bin : r.spectrum) total += bin.count;
  EXPECT_EQ(total, r.pairs);
}

TEST(EvaluateTest, C2Q5) {
  const FieldSpec f = build_field(5, 1);
  const EvalReport r = evaluate(build_c2(f, f.zero()));
  EXPECT_EQ(r.n, 100u);
  EXPECT_NEAR(r.i_max, 0.25, 1e-9);
  EXPECT_NEAR(r.ratio, ratio_formula_c2(5), 1e-9);
  EXPECT_LT(spectrum_deviation(r), 1e-9);
  ASSERT_EQ(r.spectrum.size(), 2u);
  EXPECT_NEAR(r.spectrum[0].amplitude, 0.0, 1e-9);
  EXPECT_NEAR(r.spectrum[1].amplitude, 0.25, 1e-9);
}

TEST(EvaluateTest, DegenerateQ2) {
  const FieldSpec f = build_field(2, 1);
  const EvalReport r = evaluate(build_c1(f, {0}));
  EXPECT_TRUE(r.degenerate);
  EXPECT_NEAR(r.i_max, 1.0, 1e-12);
}

// The amplitude profile does not depend on which character is held fixed.
TEST(EvaluateTest, FixedParameterIndependence) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    const FieldSpec f = build_field(p, m);
    EvalOptions opt;
    opt.workers = 1;
    const EvalReport a = evaluate(build_c1(f, {0}), opt);
    const EvalReport b = evaluate(build_c1(f, {1}), opt);
    EXPECT_EQ(a.i_max, b.i_max);
    EXPECT_EQ(a.spectrum, b.spectrum);
    const EvalReport c = evaluate(build_c2(f, f.zero()), opt);
    const EvalReport d = evaluate(build_c2(f, f.one()), opt);
    EXPECT_EQ(c.i_max, d.i_max);
    EXPECT_EQ(c.spectrum, d.spectrum);
  }
}

TEST(EvaluateTest, WorkerCountDoesNotChangeReport) {
  const FieldSpec f = build_field(7, 1);
  const Codebook cb = build_c1(f, {1});
  EvalOptions one, many;
  one.workers = 1;
  many.workers = 4;
  EXPECT_TRUE(same_results(evaluate(cb, one), evaluate(cb, many)));
  one.mode = many.mode = EvalMode::kSampled;
  one.samples = many.samples = 5000;
  one.seed = many.seed = 99;
  const EvalReport s1 = evaluate(cb, one);
  EXPECT_TRUE(same_results(s1, evaluate(cb, many)));
  EXPECT_EQ(s1.pairs, 5000u);
}

TEST(EvaluateTest, SamplePairsDeterministic) {
  EXPECT_EQ(sample_pairs(100, 50, 3), sample_pairs(100, 50, 3));
  EXPECT_NE(sample_pairs(100, 50, 3), sample_pairs(100, 50, 4));
  for (auto [i, k] : sample_pairs(10, 200, 1)) {
    EXPECT_LT(i, k);
    EXPECT_LT(k, 10u);
  }
}

TEST(EvaluateTest, ExhaustiveLimit) {
  const FieldSpec big = build_field(19, 1);  // C1: N = 6859
  const Codebook cb = build_c1(big, {1});
  EXPECT_THROW(evaluate(cb), SizeGuardError);
  EvalOptions opt;
  opt.mode = EvalMode::kSampled;
  opt.samples = 2000;
  const EvalReport r = evaluate(cb, opt);
  EXPECT_LE(r.i_max, 1.0 / 18.0 + 1e-9);
  EXPECT_LT(spectrum_deviation(r), 1e-9);
}

}  // namespace
}  // namespace ringcb
