// Copyright 2026 The addcyc Authors.
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

#include <gtest/gtest.h>

#include <string>

#include "fixtures.hpp"
#include "json_io.hpp"

namespace addcyc {
namespace {

using fixtures::example11;
using fixtures::q5;

// parse(render(x)) == x, compared through the rendered form.
template <class T, class F>
void expect_round_trip(const T& value, F from) {
  const Json j = to_json(value);
  const Json again = to_json(from(Json::parse(j.dump())));
  EXPECT_EQ(j, again) << j.dump();
}

TEST(JsonSpec, RoundTripAndDefaults) {
  expect_round_trip(example11("1"), spec_from_json);
  expect_round_trip(q5(), spec_from_json);
  const Json j = Json::parse(R"({"p":3,"beta":5,"f":"x-1","h":1,"g":[1,1,1,1,1]})");
  const CodeSpec s = spec_from_json(j);
  EXPECT_EQ(s.alpha(), 0);
  EXPECT_TRUE(s.a().is_one());
  EXPECT_TRUE(s.b().is_zero());
  EXPECT_EQ(AdditiveCode::of(s), AdditiveCode::of(q5()));
}

TEST(JsonSpec, Errors) {
  EXPECT_THROW(spec_from_json(Json::parse(R"({"p":3,"beta":5,"f":"x-1","h":"1"})")), Error);
  EXPECT_THROW(spec_from_json(Json::parse(R"({"p":4,"beta":5,"f":"x-1","h":"1","g":"x-1"})")), Error);
  EXPECT_THROW(spec_from_json(Json::parse(R"({"p":3,"beta":5,"f":"x-1","h":"1","g":"x-1"})")), Error);
  EXPECT_THROW(spec_from_json(Json::parse("[1,2]")), Error);
}

TEST(JsonTypes, RoundTrips) {
  const CodeSpec s = example11("0");
  expect_round_trip(compute_type(s).matrix, type_from_json);
  expect_round_trip(factor_xn_minus_1(PrimeBase(3), 13), factorization_from_json);
  expect_round_trip(MixedWord{Vec{1, 2}, Vec{0, 8, 4}}, word_from_json);
  const LinearityResult lin = gray_image_linearity(AdditiveCode::of(q5()), ScanMode::kExhaustive, {});
  ASSERT_TRUE(lin.witness_u.has_value());
  expect_round_trip(lin, linearity_from_json);
  expect_round_trip(code_info(s), info_from_json);
  expect_round_trip(code_info(q5()), info_from_json);
}

TEST(JsonResults, KernelAndRank) {
  expect_round_trip(kernel_compare(q5()), kernel_from_json);
  expect_round_trip(kernel_oracle(q5()), kernel_from_json);
  expect_round_trip(kernel_structural(q5()), kernel_from_json);
  expect_round_trip(rank_compare(q5()), rank_from_json);
  expect_round_trip(rank_structural(example11("0")), rank_from_json);
  const Json k = to_json(kernel_compare(q5()));
  EXPECT_EQ(k["dim"], 4);
  EXPECT_EQ(k["agreement"], true);
  EXPECT_EQ(k["method"], "both");
}

TEST(JsonResults, ClassificationTablesAndGrids) {
  const Classification c = classify(3, 2, 5);
  expect_round_trip(c.records.front(), record_from_json);
  expect_round_trip(c, classification_from_json);
  expect_round_trip(table_q_case(2, 7), table_from_json);
  expect_round_trip(cyclic_type_exists(3, 2, 13, TypeQuery{2, 4, 1}), existence_from_json);
  expect_round_trip(cyclic_type_exists(3, 2, 11, TypeQuery{2, 5, 1}), existence_from_json);
  expect_round_trip(pair_grid(2, 2, 7, TypeQuery{2, 3, std::nullopt}), pairs_from_json);
}

TEST(JsonTypeQuery, ParseAndPrint) {
  const TypeQuery q = parse_type_query("2,5,1");
  EXPECT_EQ(q.gamma, 2);
  EXPECT_EQ(q.delta, 5);
  EXPECT_EQ(q.kappa, 1);
  EXPECT_EQ(type_query_text(q), "2,5,1");
  const TypeQuery any = parse_type_query("2,3,*");
  EXPECT_FALSE(any.kappa.has_value());
  EXPECT_EQ(type_query_text(any), "2,3,*");
  EXPECT_THROW(parse_type_query("2,3"), Error);
  EXPECT_THROW(parse_type_query("a,b,c"), Error);
}

}  // namespace
}  // namespace addcyc
