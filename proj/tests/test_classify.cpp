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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "fixtures.hpp"

namespace addcyc {
namespace {

using fixtures::kF1;
using fixtures::kF2;

const PrimeBase k3(3);

PolyP2 P2(const std::string& s) { return parse_poly<Ring::kZp2>(k3, s); }

const ClassificationRecord* find(const Classification& c, const std::string& f,
                                 const std::string& h, const std::string& g) {
  for (const ClassificationRecord& r : c.records) {
    if (r.spec.f() == P2(f) && r.spec.h() == P2(h) && r.spec.g() == P2(g)) return &r;
  }
  return nullptr;
}

TEST(EnumerateCodeSpecs, Counts) {
  EXPECT_EQ(enumerate_code_specs(3, 0, 11).size(), 27u);
  EXPECT_EQ(enumerate_code_specs(3, 0, 1).size(), 3u);
  bool partial = true;
  enumerate_code_specs(3, 2, 5, 81, &partial);
  EXPECT_FALSE(partial);
  enumerate_code_specs(3, 6, 5, 3, &partial);
  EXPECT_TRUE(partial);
}

TEST(Classify, QuaternaryLengthEleven) {
  const Classification c = classify(3, 0, 11);
  ASSERT_EQ(c.records.size(), 27u);
  EXPECT_FALSE(c.partial);
  const ClassificationRecord* ab = find(c, kF1, "x-1", kF2);
  ASSERT_NE(ab, nullptr);
  EXPECT_EQ(ab->rank, 16);
  EXPECT_EQ(ab->ker, 6);
  EXPECT_EQ(ab->rank, ab->type.gamma + 3 * ab->type.delta);
  EXPECT_EQ(ab->ker, ab->type.gamma + ab->type.delta);
  const ClassificationRecord* x1 =
      find(c, "x-1", "1", "x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1");
  ASSERT_NE(x1, nullptr);
  EXPECT_EQ(x1->rank, x1->type.gamma + 2 * x1->type.delta + 1);
  EXPECT_EQ(x1->ker, x1->type.gamma + x1->type.delta);
  for (const ClassificationRecord& r : c.records) {
    if (!r.spec.g().is_one()) continue;
    EXPECT_TRUE(r.linear);
    EXPECT_EQ(r.rank, r.type.gamma + 2 * r.type.delta);
    EXPECT_EQ(r.ker, r.rank);
  }
}

TEST(Classify, SortedAndDeterministic) {
  const Classification a = classify(3, 2, 5);
  RunConfig cfg;
  cfg.workers = 3;
  const Classification b = classify(3, 2, 5, cfg);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].spec.key(), b.records[i].spec.key());
    EXPECT_EQ(a.records[i].rank, b.records[i].rank);
    EXPECT_EQ(a.records[i].ker, b.records[i].ker);
  }
  for (const ClassificationRecord& r : a.records) {
    EXPECT_LE(r.ker, r.type.gamma + 2 * r.type.delta);
    EXPECT_GE(r.rank, r.type.gamma + 2 * r.type.delta);
    EXPECT_EQ(r.linear, r.rank == r.ker);
  }
}

TEST(Table, BinaryLengthSevenAllRowsMatch) {
  const TableReport t = table_q_case(2, 7);
  EXPECT_TRUE(t.circle_identity);
  EXPECT_TRUE(t.all_match());
  for (const TableRow& r : t.rows) {
    EXPECT_TRUE(r.oracle_run);
    EXPECT_TRUE(r.agreement()) << r.f << " " << r.g << " " << r.h;
  }
  EXPECT_NE(t.render().find("x-1"), std::string::npos);
}

TEST(Table, TernaryLengthEleven) {
  const TableReport t = table_q_case(3, 11);
  EXPECT_TRUE(t.circle_identity);
  std::set<std::pair<std::string, std::string>> ker_off;
  for (const TableRow& r : t.rows) {
    EXPECT_TRUE(r.rank_match()) << r.f << " " << r.g << " " << r.h;
    if (r.gamma + r.delta <= 8) {
      EXPECT_TRUE(r.oracle_run);
    }
    if (!r.ker_match()) ker_off.insert({r.f, r.g});
  }
  // Rows where the kernel formula and the oracle differ; the oracle gives gamma + delta.
  EXPECT_EQ(ker_off, (std::set<std::pair<std::string, std::string>>{{"a", "(x-1)b"}, {"b", "(x-1)a"}}));
  for (const TableRow& r : t.rows) {
    if (r.ker_match()) continue;
    EXPECT_EQ(r.ker, r.gamma + r.delta);
    EXPECT_EQ(r.ker_structural, r.ker_expected);
  }
}

TEST(Table, RejectsUnsupportedLength) {
  try {
    table_q_case(3, 5);
    ADD_FAILURE() << "expected HypothesisUnmet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisUnmet);
  }
}

TEST(TypeExists, AbsentWithCertificate) {
  const TypeExistence e = cyclic_type_exists(3, 2, 13, TypeQuery{2, 4, 1});
  EXPECT_TRUE(e.gate_passed);
  EXPECT_FALSE(e.exists);
  EXPECT_FALSE(e.witness.has_value());
  EXPECT_EQ(e.a_count, 4);
  EXPECT_EQ(e.triple_count, 243);
  EXPECT_FALSE(e.certificate().empty());
}

TEST(TypeExists, WitnessForLengthEleven) {
  const TypeExistence e = cyclic_type_exists(3, 2, 11, TypeQuery{2, 5, 1});
  ASSERT_TRUE(e.exists);
  const CodeType t = AdditiveCode::of(*e.witness).type();
  EXPECT_EQ(t.gamma, 2);
  EXPECT_EQ(t.delta, 5);
  EXPECT_EQ(t.kappa, 1);
}

TEST(TypeExists, GateRejectsWithoutSearch) {
  const TypeExistence e = cyclic_type_exists(3, 2, 11, TypeQuery{2, 11, 0});
  EXPECT_FALSE(e.gate_passed);
  EXPECT_FALSE(e.exists);
  EXPECT_EQ(e.specs_checked, 0u);
}

TEST(PairGrid, BinaryCyclicGrid) {
  const PairGrid g = pair_grid(2, 2, 7, TypeQuery{2, 3, std::nullopt});
  std::set<std::pair<int, int>> achieved;
  for (const auto& [rk, spec] : g.achieved) achieved.insert(rk);
  EXPECT_EQ(achieved, (std::set<std::pair<int, int>>{{11, 5}}));
  EXPECT_TRUE(g.achieved_in_box());
  EXPECT_GT(g.specs_of_type, 0);
  EXPECT_EQ(g.theoretical,
            (std::set<std::pair<int, int>>{{8, 8}, {9, 6}, {9, 5}, {10, 5}, {11, 5}}));
}

TEST(PairGrid, TheoreticalBoxTernary) {
  const std::set<std::pair<int, int>> t = theoretical_pairs(3, 11, 2, 5, 1);
  std::set<std::pair<int, int>> expect{{12, 12}, {13, 11}};
  for (int k = 7; k <= 10; ++k) {
    for (int r = 13; r <= 17; ++r) expect.insert({r, k});
  }
  EXPECT_EQ(t, expect);
}

TEST(PairGrid, LinearOnlyTypeGivesSinglePair) {
  // delta = 0: every code has order p and a linear image.
  const PairGrid g = pair_grid(3, 2, 5, TypeQuery{3, 0, std::nullopt});
  for (const auto& [rk, spec] : g.achieved) {
    EXPECT_EQ(rk.first, 3);
    EXPECT_EQ(rk.second, 3);
  }
  EXPECT_FALSE(g.achieved.empty());
}

}  // namespace
}  // namespace addcyc
