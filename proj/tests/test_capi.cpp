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

#include "addcyc.h"

#include <gtest/gtest.h>

#include <json.hpp>
#include <memory>
#include <set>
#include <string>

namespace {

using Json = nlohmann::json;

struct Ctx {
  adc_context* c = adc_context_new();
  ~Ctx() { adc_context_free(c); }
  Json result() const { return Json::parse(adc_result(c)); }
  std::string error() const { return adc_error(c); }
};

struct Code {
  adc_code* h = nullptr;
  ~Code() { adc_code_free(h); }
};

const char* kQ5 = R"({"p":3,"beta":5,"f":"x-1","h":"1","g":"x^4+x^3+x^2+x+1"})";
const char* kMismatch =
    R"({"p":3,"beta":11,"f":"x^5+3x^4-x^3+x^2+2x-1","h":"1","g":"x^6+6x^5+x^4+2x^3+5x^2+2x+1"})";

TEST(CApi, VersionAndLifecycle) {
  EXPECT_NE(std::string(adc_version()), "");
  Ctx ctx;
  ASSERT_NE(ctx.c, nullptr);
  EXPECT_EQ(std::string(adc_result(ctx.c)), "null");
  Code code;
  ASSERT_EQ(adc_code_new(ctx.c, kQ5, &code.h), ADC_OK);
  ASSERT_NE(code.h, nullptr);
  ASSERT_EQ(adc_code_spec(ctx.c, code.h), ADC_OK);
  const Json s = ctx.result();
  EXPECT_EQ(s["p"], 3);
  EXPECT_EQ(s["alpha"], 0);
  EXPECT_EQ(s["beta"], 5);
  adc_context_free(nullptr);
  adc_code_free(nullptr);
}

TEST(CApi, Configure) {
  Ctx ctx;
  EXPECT_EQ(adc_configure(ctx.c, R"({"workers":2,"seed":7,"residueBudget":1000})"), ADC_OK);
  EXPECT_EQ(adc_configure(ctx.c, R"({"speed":"fast"})"), ADC_INPUT_ERROR);
  EXPECT_FALSE(ctx.error().empty());
  EXPECT_EQ(adc_configure(ctx.c, "{not json"), ADC_INPUT_ERROR);
  EXPECT_EQ(ctx.error().rfind("ParseError: ", 0), 0u) << ctx.error();
}

TEST(CApi, Factor) {
  Ctx ctx;
  ASSERT_EQ(adc_factor(ctx.c, 3, 13), ADC_OK);
  const Json r = ctx.result();
  std::set<std::string> got;
  for (const Json& f : r["factors"]) got.insert(f["factor"].get<std::string>());
  EXPECT_EQ(got.size(), 5u);
  EXPECT_TRUE(got.count("x+8"));
  EXPECT_TRUE(got.count("x^3+6x^2+2x+8"));
  EXPECT_EQ(adc_factor(ctx.c, 3, 3), ADC_INPUT_ERROR);
  EXPECT_EQ(std::string(adc_result(ctx.c)), "null");
  EXPECT_EQ(ctx.error().find(':') != std::string::npos, true);
}

TEST(CApi, InvalidSpec) {
  Ctx ctx;
  Code code;
  EXPECT_EQ(adc_code_new(ctx.c, R"({"p":3,"beta":5,"f":"x-1","h":"1","g":"x-1"})", &code.h),
            ADC_INPUT_ERROR);
  EXPECT_EQ(code.h, nullptr);
  EXPECT_EQ(ctx.error().rfind("InvalidSpec: ", 0), 0u) << ctx.error();
  EXPECT_EQ(adc_code_new(ctx.c, nullptr, &code.h), ADC_INPUT_ERROR);
}

TEST(CApi, NullHandles) {
  Ctx ctx;
  EXPECT_EQ(adc_info(ctx.c, nullptr), ADC_INPUT_ERROR);
  EXPECT_EQ(adc_kernel(ctx.c, nullptr, "oracle"), ADC_INPUT_ERROR);
  EXPECT_EQ(adc_factor(nullptr, 3, 13), ADC_INPUT_ERROR);
  EXPECT_EQ(adc_configure(nullptr, "{}"), ADC_INPUT_ERROR);
}

TEST(CApi, InfoKernelRank) {
  Ctx ctx;
  Code code;
  ASSERT_EQ(adc_code_new(ctx.c, kQ5, &code.h), ADC_OK);
  ASSERT_EQ(adc_info(ctx.c, code.h), ADC_OK);
  const Json info = ctx.result();
  EXPECT_EQ(info["typeMatrix"]["gamma"], 0);
  EXPECT_EQ(info["typeMatrix"]["delta"], 4);
  EXPECT_EQ(info["linearity"]["linear"], false);
  ASSERT_EQ(adc_kernel(ctx.c, code.h, "both"), ADC_OK);
  EXPECT_EQ(ctx.result()["dim"], 4);
  ASSERT_EQ(adc_rank(ctx.c, code.h, "oracle"), ADC_OK);
  EXPECT_EQ(ctx.result()["dim"], 9);
  EXPECT_EQ(adc_rank(ctx.c, code.h, "fastest"), ADC_INPUT_ERROR);
}

TEST(CApi, Gray) {
  Ctx ctx;
  ASSERT_EQ(adc_gray(ctx.c, 3, R"({"x":[1,0],"y":[4]})"), ADC_OK);
  EXPECT_EQ(ctx.result()["gray"], "10120");
  EXPECT_EQ(adc_gray(ctx.c, 3, R"({"x":[3],"y":[]})"), ADC_INPUT_ERROR);
}

TEST(CApi, MismatchKeepsBothValues) {
  Ctx ctx;
  Code code;
  ASSERT_EQ(adc_code_new(ctx.c, kMismatch, &code.h), ADC_OK);
  ASSERT_EQ(adc_kernel(ctx.c, code.h, "both"), ADC_STRUCTURAL_MISMATCH);
  const Json r = ctx.result();
  EXPECT_EQ(r["dim"], 6);
  EXPECT_EQ(r["structuralDim"], 7);
  EXPECT_EQ(r["agreement"], false);
  EXPECT_EQ(ctx.error().rfind("StructuralMismatch: ", 0), 0u) << ctx.error();
  ASSERT_EQ(adc_kernel(ctx.c, code.h, "oracle"), ADC_OK);
  EXPECT_EQ(ctx.result()["dim"], 6);
}

TEST(CApi, Budget) {
  Ctx ctx;
  ASSERT_EQ(adc_configure(ctx.c, R"({"residueBudget":10})"), ADC_OK);
  Code code;
  ASSERT_EQ(adc_code_new(ctx.c, kQ5, &code.h), ADC_OK);
  EXPECT_EQ(adc_rank(ctx.c, code.h, "oracle"), ADC_BUDGET_EXCEEDED);
  EXPECT_EQ(ctx.error().rfind("BudgetExceeded: ", 0), 0u) << ctx.error();
}

TEST(CApi, ClassifyTableAndTypes) {
  Ctx ctx;
  ASSERT_EQ(adc_classify(ctx.c, 3, 0, 11, 81), ADC_OK);
  EXPECT_EQ(ctx.result()["records"].size(), 27u);
  ASSERT_EQ(adc_table1(ctx.c, 2, 7), ADC_OK);
  EXPECT_TRUE(ctx.result().contains("text"));
  ASSERT_EQ(adc_type_exists(ctx.c, 3, 2, 13, "2,4,1", 81), ADC_OK);
  EXPECT_EQ(ctx.result()["exists"], false);
  ASSERT_EQ(adc_pairs(ctx.c, 2, 2, 7, "2,3,*", 81), ADC_OK);
  EXPECT_EQ(adc_pairs(ctx.c, 2, 2, 7, "2,3", 81), ADC_INPUT_ERROR);
  EXPECT_EQ(adc_table1(ctx.c, 3, 5), ADC_INPUT_ERROR);
}

}  // namespace
