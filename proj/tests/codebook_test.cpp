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

#include "ringcb/codebook.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "ringcb/verify.hpp"

namespace ringcb {
namespace {

TEST(CodebookTest, Parameters) {
  const FieldSpec f3 = build_field(3, 1);
  const Codebook c1 = build_c1(f3, {1});
  EXPECT_EQ(c1.size(), 27u);
  EXPECT_EQ(c1.length(), 6u);
  const Codebook c2 = build_c2(f3, f3.zero());
  EXPECT_EQ(c2.size(), 18u);
  EXPECT_EQ(c2.length(), 6u);

  const FieldSpec f2 = build_field(2, 1);
  const Codebook d = build_c2(f2, f2.zero());
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.length(), 2u);

  const Codebook c0 = build_c0(f3);
  EXPECT_EQ(c0.size(), 54u);
  EXPECT_FALSE(c0.fixed_param().has_value());
}

TEST(CodebookTest, ConstantRows) {
  const FieldSpec f3 = build_field(3, 1);
  const Codebook c1 = build_c1(f3, {0});
  for (auto e : c1.row(0)) EXPECT_EQ(e, 0u);
  const FieldSpec f5 = build_field(5, 1);
  const Codebook c2 = build_c2(f5, f5.zero());
  for (auto e : c2.row(0)) EXPECT_EQ(e, 0u);
}

TEST(CodebookTest, EntryAtGeneratorCoordinate) {
  const FieldSpec f = build_field(2, 2);
  const Codebook cb = build_c1(f, {1});
  // Row (0,0,0), column (t0 = g, t1 = 0).
  const std::size_t col = (f.generator().code - 1) * f.q() + 0;
  EXPECT_EQ(cb.row(0)[col], 2u);  // zeta_3 = exp(2 pi i 2/6)
}

TEST(CodebookTest, RowOrderAndLabels) {
  const FieldSpec f = build_field(3, 1);
  const Codebook c1 = build_c1(f, {1});
  const RowLabel l = c1.label(5);  // (a,b,c) = (0,1,2)
  EXPECT_EQ(l.a.code, 0u);
  EXPECT_EQ(l.b.code, 1u);
  EXPECT_EQ(l.c.code, 2u);
  EXPECT_EQ(l.j.j, 1u);
  const Codebook c2 = build_c2(f, FieldElement{2});
  const RowLabel l2 = c2.label(13);  // (j,a,c) = (1,1,1)
  EXPECT_EQ(l2.j.j, 1u);
  EXPECT_EQ(l2.a.code, 1u);
  EXPECT_EQ(l2.c.code, 1u);
  EXPECT_EQ(l2.b.code, 2u);
  EXPECT_THROW(c2.label(18), std::out_of_range);
}

// Each entry against psi_j(t0) exp(2 pi i Tr(a t1 + b t0 + c t0 t1) / p)
// evaluated in floating point with schoolbook field arithmetic.
TEST(CodebookTest, EntriesMatchDirectEvaluation) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {2, 2}, {5, 1}}) {
    const FieldSpec f = build_field(p, m);
    const verify::NaiveField nf{p, m, f.modulus()};
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> dlog(q, 0);
    for (std::uint32_t k = 0, x = 1; k + 1 < q; ++k, x = nf.mul(x, f.generator().code)) {
      dlog[x] = k;
    }
    for (const Codebook& cb : {build_c1(f, {1}), build_c2(f, FieldElement{q - 1}), build_c0(f)}) {
      for (std::size_t r = 0; r < cb.size(); ++r) {
        const RowLabel l = cb.label(r);
        const auto row = cb.row(r);
        for (std::uint32_t t0 = 1; t0 < q; ++t0) {
          for (std::uint32_t t1 = 0; t1 < q; ++t1) {
            const std::uint32_t arg =
                nf.add(nf.add(nf.mul(l.a.code, t1), nf.mul(l.b.code, t0)),
                       nf.mul(l.c.code, nf.mul(t0, t1)));
            const auto want = verify::unit_root(double(l.j.j) * dlog[t0], q - 1) *
                              verify::unit_root(nf.frobenius_sum(arg), p);
            const auto got = cb.phases()[row[(t0 - 1) * q + t1]];
            ASSERT_LT(std::abs(got - want), 1e-12);
          }
        }
      }
    }
  }
}

TEST(CodebookTest, RowsDistinctAndUnitNorm) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    const FieldSpec f = build_field(p, m);
    for (const Codebook& cb : {build_c1(f, {1 % (f.q() - 1)}), build_c2(f, f.zero())}) {
      std::set<std::vector<std::uint32_t>> rows;
      for (std::size_t r = 0; r < cb.size(); ++r) {
        rows.emplace(cb.row(r).begin(), cb.row(r).end());
        EXPECT_NEAR(std::abs(inner_product(cb, r, r) - 1.0), 0.0, 1e-12);
      }
      EXPECT_EQ(rows.size(), cb.size());
    }
  }
}

TEST(InnerProductTest, C1Examples) {
  const FieldSpec f = build_field(5, 1);
  const Codebook cb = build_c1(f, {1});
  const double q = 5;
  // Rows (0,b,0) and (0,0,0): -q/K = -1/(q-1).
  for (std::uint32_t b = 1; b < 5; ++b) {
    EXPECT_NEAR(std::abs(inner_product(cb, b * 5, 0) - (-1.0 / (q - 1))), 0.0, 1e-12);
  }
  // a != 0, c = 0.
  EXPECT_NEAR(std::abs(inner_product(cb, 2 * 25 + 3 * 5, 0)), 0.0, 1e-12);
  EXPECT_THROW(inner_product(cb, 0, cb.size()), std::out_of_range);
}

TEST(PredictedTest, C1Cases) {
  const FieldSpec f = build_field(7, 1);
  const double q = 7;
  const auto z = f.zero();
  EXPECT_NEAR(std::abs(predicted_inner_product_c1(f, z, FieldElement{3}, z) + 1.0 / (q - 1)),
              0.0, 1e-15);
  EXPECT_EQ(predicted_inner_product_c1(f, FieldElement{2}, z, z), std::complex<double>(0.0));
  EXPECT_EQ(predicted_inner_product_c1(f, z, FieldElement{2}, FieldElement{5}),
            std::complex<double>(0.0));
  for (std::uint32_t b = 0; b < 7; ++b) {
    EXPECT_NEAR(std::abs(predicted_inner_product_c1(f, FieldElement{4}, FieldElement{b},
                                                    FieldElement{6})),
                1.0 / (q - 1), 1e-15);
  }
  EXPECT_THROW(predicted_inner_product_c1(f, z, z, z), std::invalid_argument);
}

TEST(PredictedTest, C2Cases) {
  const FieldSpec f = build_field(7, 1);
  const double q = 7;
  const auto z = f.zero();
  EXPECT_EQ(predicted_inner_product_c2(f, {3}, z, z), std::complex<double>(0.0));
  EXPECT_EQ(predicted_inner_product_c2(f, {3}, z, FieldElement{1}), std::complex<double>(0.0));
  for (std::uint32_t j = 0; j < 6; ++j) {
    EXPECT_NEAR(std::abs(predicted_inner_product_c2(f, {j}, FieldElement{2}, FieldElement{5})),
                1.0 / (q - 1), 1e-15);
  }
  EXPECT_THROW(predicted_inner_product_c2(f, {0}, z, z), std::invalid_argument);
}

void expect_all_pairs_match(const Codebook& cb) {
  for (std::size_t i = 0; i < cb.size(); ++i) {
    for (std::size_t k = 0; k < cb.size(); ++k) {
      if (i == k) continue;
      ASSERT_LT(std::abs(inner_product(cb, i, k) - predicted_inner_product(cb, i, k)), 1e-9)
          << to_string(cb.construction()) << " q=" << cb.field().q() << " rows " << i << ","
          << k;
    }
  }
}

TEST(PredictedTest, MatchesInnerProductsExhaustive) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldSpec f = build_field(p, m);
    expect_all_pairs_match(build_c1(f, {1 % (f.q() - 1)}));
    expect_all_pairs_match(build_c1(f, {0}));
    expect_all_pairs_match(build_c2(f, f.zero()));
    expect_all_pairs_match(build_c2(f, f.one()));
  }
}

TEST(PredictedTest, MatchesInnerProductsSampled) {
  std::mt19937_64 gen(11);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {7, 1}, {2, 3}, {3, 2}}) {
    const FieldSpec f = build_field(p, m);
    for (const Codebook& cb : {build_c1(f, {1}), build_c2(f, f.zero())}) {
      std::uniform_int_distribution<std::size_t> pick(0, cb.size() - 1);
      for (int s = 0; s < 20000; ++s) {
        const std::size_t i = pick(gen), k = pick(gen);
        if (i == k) continue;
        ASSERT_LT(std::abs(inner_product(cb, i, k) - predicted_inner_product(cb, i, k)), 1e-9);
      }
    }
  }
}

// With a single t0, (a, c) only enters through a + c, so rows repeat.
TEST(CodebookTest, Q2HasRepeatedRows) {
  const FieldSpec f = build_field(2, 1);
  const Codebook cb = build_c2(f, f.zero());
  EXPECT_EQ(std::vector<std::uint32_t>(cb.row(1).begin(), cb.row(1).end()),
            std::vector<std::uint32_t>(cb.row(2).begin(), cb.row(2).end()));
}

TEST(CodebookTest, RejectsInconsistentParts) {
  const FieldSpec f = build_field(3, 1);
  EXPECT_THROW(Codebook(Construction::kC1, f, 1u, 27, std::vector<std::uint32_t>(27 * 6, 6)),
               std::invalid_argument);  // exponent >= n_root
  EXPECT_THROW(Codebook(Construction::kC1, f, 1u, 26, std::vector<std::uint32_t>(26 * 6, 0)),
               std::invalid_argument);
  EXPECT_THROW(Codebook(Construction::kC2, f, std::nullopt, 18,
                        std::vector<std::uint32_t>(18 * 6, 0)),
               std::invalid_argument);
  EXPECT_THROW(Codebook(Construction::kC1, f, 2u, 27, std::vector<std::uint32_t>(27 * 6, 0)),
               std::invalid_argument);
  EXPECT_THROW(predicted_inner_product(build_c0(f), 0, 1), std::invalid_argument);
  EXPECT_THROW(parse_construction("c3"), std::invalid_argument);
}

TEST(CodebookTest, SizeGuard) {
  const FieldSpec f = build_field(2, 6);
  // C1 at q = 64: 262144 x 4032 entries.
  EXPECT_THROW(build_c1(f, {1}), SizeGuardError);
}

}  // namespace
}  // namespace ringcb
