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

// Randomized invariants over every cyclic code of a few small lengths.
// Fixed seed; 10^4 cases per configuration.

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gray.hpp"
#include "kernelrank.hpp"

namespace addcyc {
namespace {

constexpr int kCases = 10000;
constexpr uint64_t kEnumCap = 20000;

struct Heavy {
  AdditiveCode code;
  AdditiveCode ker;
  AdditiveCode rank;
};

// Random element: a Z_{p^2} combination of the generators.
Row random_word(const AdditiveCode& c, std::mt19937_64& rng) {
  const PrimeBase& b = c.base();
  Row w(c.length(), 0);
  for (const Row& g : c.generators()) {
    const int k = static_cast<int>(rng() % b.p2());
    for (size_t i = 0; i < w.size(); ++i) w[i] = static_cast<uint8_t>(b.mod_p2(w[i] + k * g[i]));
  }
  return w;
}

// Y part of every generator, as a code of length beta.
AdditiveCode y_part(const AdditiveCode& c) {
  std::vector<Row> rows;
  for (const Row& g : c.generators()) rows.emplace_back(g.begin() + c.alpha(), g.end());
  return AdditiveCode(c.base(), 0, c.beta(), rows);
}

Row pad_x(const Row& y, int alpha) {
  Row r(alpha, 0);
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

// Checks made once per code.
void check_code(const CodeSpec& s, const Heavy& h) {
  const std::string key = s.key();
  // Sandwich K(C) <= C <= R(C).
  EXPECT_TRUE(h.code.contains_code(h.ker)) << key;
  EXPECT_TRUE(h.rank.contains_code(h.code)) << key;
  EXPECT_LE(h.ker.log_size(), h.code.log_size()) << key;
  EXPECT_GE(h.rank.log_size(), h.code.log_size()) << key;
  EXPECT_EQ(h.ker.log_size() == h.code.log_size(), h.rank.log_size() == h.code.log_size())
      << key;

  // Injectivity of the Gray map on the code.
  if (std::pow(s.p(), h.code.log_size()) <= kEnumCap) {
    std::set<Vec> images;
    uint64_t n = 0;
    h.code.enumerate(kEnumCap, [&](const Row& r) {
      images.insert(gray_word(unembed(r, s.alpha(), s.base()), s.base()).entries);
      ++n;
    });
    EXPECT_EQ(images.size(), n) << key;
  }

  // Projections onto the Z_{p^2} coordinates.
  const CodeSpec sy = project_y(s);
  const bool oracle = fits_power(s.p(), 2 * h.code.delta(), RunConfig{}.pair_budget);
  const AdditiveCode ker_y = *(oracle ? kernel_oracle(sy) : kernel_structural(sy)).code;
  const AdditiveCode rank_y = *(oracle ? rank_oracle(sy) : rank_structural(sy)).code;
  EXPECT_TRUE(ker_y.contains_code(y_part(h.ker))) << key;
  EXPECT_EQ(y_part(h.rank), rank_y) << key;

  // Separable codes: K(C) = C_X x K(C_Y).
  if (is_separable(s).by_size) {
    std::vector<Row> rows;
    for (const Row& g : h.code.generators()) {
      Row x(g.begin(), g.begin() + s.alpha());
      x.resize(g.size(), 0);
      rows.push_back(x);
    }
    for (const Row& g : ker_y.generators()) rows.push_back(pad_x(g, s.alpha()));
    EXPECT_EQ(AdditiveCode(s.base(), s.alpha(), s.beta(), rows), h.ker) << key;
  }
}

void run_config(int p, int alpha, int beta, uint64_t seed) {
  auto fact = std::make_shared<XnFactorization>(factor_xn_minus_1(PrimeBase(p), beta));
  const std::vector<CodeSpec> specs = enumerate_specs(fact, alpha, 81);
  ASSERT_FALSE(specs.empty());
  const PrimeBase base(p);
  std::map<size_t, std::unique_ptr<Heavy>> memo;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kCases; ++i) {
    const size_t idx = rng() % specs.size();
    const CodeSpec& s = specs[idx];
    auto& slot = memo[idx];
    if (!slot) {
      const AdditiveCode c = AdditiveCode::of(s);
      // Same gate as classification: past the pair budget K(C) and R(C) are structural.
      const RunConfig cfg;
      const bool oracle = fits_power(p, 2 * c.delta(), cfg.pair_budget);
      slot = std::make_unique<Heavy>(
          Heavy{c, *(oracle ? kernel_oracle(c) : kernel_structural(s)).code,
                *(oracle ? rank_oracle(c) : rank_structural(s)).code});
      check_code(s, *slot);
    }
    const Heavy& h = *slot;

    // Gray identity on a pair of codewords.
    const MixedWord u = unembed(random_word(h.code, rng), alpha, base);
    const MixedWord v = unembed(random_word(h.code, rng), alpha, base);
    ASSERT_TRUE(gray_identity_check(u, v, base)) << s.key();

    // The carry depends only on residues mod p.
    MixedWord u2 = u, v2 = v;
    for (auto& e : u2.y) e = static_cast<uint8_t>(base.mod_p2(e + p * static_cast<int>(rng() % p)));
    for (auto& e : v2.y) e = static_cast<uint8_t>(base.mod_p2(e + p * static_cast<int>(rng() % p)));
    ASSERT_EQ(carry_vector(u2, v2, base), carry_vector(u, v, base)) << s.key();

    // C, K(C) and R(C) are closed under the cyclic shift.
    for (const AdditiveCode* c : {&h.code, &h.ker, &h.rank}) {
      const Row w = random_word(*c, rng);
      ASSERT_TRUE(c->contains(w));
      ASSERT_TRUE(c->contains(cyclic_shift(w, alpha))) << s.key();
    }
  }
  EXPECT_EQ(memo.size(), specs.size());
}

TEST(Properties, Ternary_2_5) { run_config(3, 2, 5, 101); }
TEST(Properties, Ternary_0_11) { run_config(3, 0, 11, 102); }
TEST(Properties, Quinary_1_3) { run_config(5, 1, 3, 103); }
TEST(Properties, Binary_2_7) { run_config(2, 2, 7, 104); }

}  // namespace
}  // namespace addcyc
