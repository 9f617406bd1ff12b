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

#include "ringcb/io.hpp"

#include <string>

#include "gtest/gtest.h"

namespace ringcb {
namespace {

TEST(IoTest, FieldJson) {
  const FieldSpec f = build_field(3, 2);
  const auto j = field_to_json(f);
  EXPECT_EQ(j.dump(), R"({"p":3,"m":2,"modulus":[1,0,1],"g":4})");
  const FieldSpec g = field_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(g.modulus(), f.modulus());
  EXPECT_EQ(g.generator(), f.generator());
  for (std::uint32_t x = 1; x < 9; ++x) {
    EXPECT_EQ(g.discrete_log(FieldElement{x}), f.discrete_log(FieldElement{x}));
  }
  EXPECT_THROW(field_from_json(nlohmann::json::parse(R"({"p":2,"m":2,"modulus":[1,0,1],"g":2})")),
               FormatError);
  EXPECT_THROW(field_from_json(nlohmann::json::parse(R"({"p":2,"m":2})")), FormatError);
}

TEST(IoTest, NonDefaultGeneratorSurvives) {
  const FieldSpec f = build_field(5, 1, std::nullopt, 3u);
  EXPECT_EQ(f.generator().code, 3u);
  EXPECT_EQ(field_from_json(nlohmann::json::parse(field_to_json(f).dump())).generator().code,
            3u);
}

TEST(IoTest, RingElementJson) {
  const FieldSpec f = build_field(5, 1);
  const RingElement r{FieldElement{2}, FieldElement{3}};
  EXPECT_EQ(ring_element_to_json(r).dump(), "[2,3]");
  EXPECT_EQ(ring_element_from_json(f, ring_element_to_json(r)), r);
  EXPECT_THROW(ring_element_from_json(f, nlohmann::json::parse("[2,5]")), FormatError);
  EXPECT_THROW(ring_element_from_json(f, nlohmann::json::parse("[2]")), FormatError);
}

TEST(IoTest, CodebookRoundTrip) {
  const FieldSpec f = build_field(2, 2);
  for (const Codebook& cb : {build_c1(f, {1}), build_c2(f, f.one()), build_c0(f)}) {
    const std::string text = codebook_to_json(cb);
    const Codebook back = codebook_from_json(text);
    EXPECT_EQ(back.construction(), cb.construction());
    EXPECT_EQ(back.fixed_param(), cb.fixed_param());
    EXPECT_EQ(back.entries(), cb.entries());
    EXPECT_EQ(codebook_to_json(back), text);
  }
}

TEST(IoTest, CodebookLayout) {
  const FieldSpec f = build_field(2, 1);
  const std::string text = codebook_to_json(build_c2(f, f.zero()));
  EXPECT_EQ(text,
            "{\"construction\":\"c2\",\"p\":2,\"m\":1,\"modulus\":[0,1],\"g\":1,"
            "\"fixed_param\":0,\"N\":4,\"K\":2,\"n_root\":2,\"rows\":[\n"
            "[0,0],\n[0,1],\n[0,1],\n[0,0]\n]}\n");
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j.at("rows").size(), 4u);
}

TEST(IoTest, RejectsMalformedCodebooks) {
  const FieldSpec f = build_field(3, 1);
  const std::string good = codebook_to_json(build_c2(f, f.zero()));
  EXPECT_NO_THROW(codebook_from_json(good));
  EXPECT_THROW(codebook_from_json("not json"), FormatError);
  EXPECT_THROW(codebook_from_json("[]"), FormatError);

  auto j = nlohmann::json::parse(good);
  auto bad = j;
  bad["rows"][0][0] = 6;  // n_root = 6
  EXPECT_THROW(codebook_from_json(bad.dump()), FormatError);
  bad = j;
  bad["rows"][0][0] = -1;
  EXPECT_THROW(codebook_from_json(bad.dump()), FormatError);
  bad = j;
  bad["rows"].erase(0);
  EXPECT_THROW(codebook_from_json(bad.dump()), FormatError);
  bad = j;
  bad["K"] = 5;
  EXPECT_THROW(codebook_from_json(bad.dump()), FormatError);
  bad = j;
  bad["construction"] = "c9";
  EXPECT_THROW(codebook_from_json(bad.dump()), FormatError);
  bad = j;
  bad.erase("n_root");
  EXPECT_THROW(codebook_from_json(bad.dump()), FormatError);
}

TEST(IoTest, ReportExports) {
  const FieldSpec f = build_field(3, 1);
  EvalReport r = evaluate(build_c1(f, {1}));
  const std::string row = report_csv_row(r);
  EXPECT_EQ(row.substr(0, 7), "3,27,6,");
  EXPECT_EQ(report_csv_header(), "q,N,K,i_max,i_w,ratio");
  const auto j = report_to_json(r);
  EXPECT_EQ(j.at("N"), 27);
  EXPECT_EQ(j.at("spectrum").size(), r.spectrum.size());
  EXPECT_DOUBLE_EQ(j.at("i_max").get<double>(), r.i_max);
}

}  // namespace
}  // namespace ringcb
