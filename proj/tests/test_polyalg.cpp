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
#include <vector>

#include "factor.hpp"
#include "oracles.hpp"

namespace addcyc {
namespace {

const PrimeBase k3(3);

PolyP2 P2(const std::string& s, const PrimeBase& b = k3) { return parse_poly<Ring::kZp2>(b, s); }
PolyP P1(const std::string& s, const PrimeBase& b = k3) { return parse_poly<Ring::kZp>(b, s); }

std::set<std::string> factor_strings(const XnFactorization& f) {
  std::set<std::string> out;
  for (const XnFactor& x : f.factors()) out.insert(x.lifted.str());
  return out;
}

TEST(PolyParse, CaretAndListFormsAgree) {
  EXPECT_EQ(P2("x^3+6x^2+2x+8"), P2("[8,2,6,1]"));
  EXPECT_EQ(P2("x^5+3x^4-x^3+x^2+2x-1").str(), "x^5+3x^4+8x^3+x^2+2x+8");
  EXPECT_EQ(P1("x^2-1").str(), "x^2+2");
  EXPECT_THROW(P2("x^^2"), Error);
}

TEST(PolyDivMod, DifferenceOfSquares) {
  const DivMod2 d = poly_divmod_monic(P2("x^2-1"), P2("x-1"));
  EXPECT_EQ(d.quotient, P2("x+1"));
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(PolyDivMod, SelfDivision) {
  const PolyP2 f = P2("x^3+6x^2+2x+8");
  const DivMod2 d = poly_divmod_monic(f, f);
  EXPECT_TRUE(d.quotient.is_one());
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(PolyDivMod, LinearFactorOfX13) {
  const DivMod2 d = poly_divmod_monic(PolyP2::xn_minus_one(k3, 13), P2("x+8"));
  EXPECT_EQ(d.quotient.degree(), 12);
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(PolyDivMod, RejectsNonMonicDivisor) {
  EXPECT_THROW(poly_divmod_monic(P2("x^2"), P2("3x+1")), Error);
}

TEST(PolyGcd, Basics) {
  EXPECT_EQ(poly_gcd(P1("x^2-1"), P1("x-1")), P1("x-1"));
  EXPECT_EQ(poly_gcd(P1("2x+2"), PolyP::zero(k3)), P1("x+1"));
  const PolyP f2bar = reduce_mod_p(P2("x^5+7x^4-x^3+x^2+6x-1"));
  EXPECT_TRUE(poly_gcd(P1("x-1"), f2bar).is_one());
}

TEST(PolyLcm, Basics) {
  EXPECT_EQ(poly_lcm(P1("x-1"), P1("x-1")), P1("x-1"));
  EXPECT_EQ(poly_lcm(P1("x-1"), P1("x+1")), P1("x^2-1"));
  const PolyP f1 = P1("x^5+2x^3+x^2+2x+2");
  EXPECT_EQ(poly_lcm(f1, P1("x-1")), f1 * P1("x-1"));
}

TEST(PolyGcd, GcdTimesLcmOverDivisors) {
  for (int n : {5, 7, 11, 13}) {
    const std::vector<PolyP> ds = divisors_of_xn_minus_1(k3, n);
    for (const PolyP& u : ds) {
      for (const PolyP& v : ds) EXPECT_EQ(poly_gcd(u, v) * poly_lcm(u, v), u * v);
    }
  }
}

TEST(PolyXgcd, BezoutIdentity) {
  const PolyP u = P1("x^5+2x^3+x^2+2x+2"), v = P1("x^3+x+1");
  const XGcd x = poly_xgcd(u, v);
  EXPECT_EQ(x.s * u + x.t * v, x.g);
}

TEST(ReduceModP, CoefficientwiseReduction) {
  EXPECT_EQ(reduce_mod_p(P2("x^5+3x^4-x^3+x^2+2x-1")), P1("x^5+2x^3+x^2+2x+2"));
  EXPECT_TRUE(reduce_mod_p(P2("x^2+1").scaled(3)).is_zero());
  EXPECT_TRUE(reduce_mod_p(P2("1")).is_one());
}

TEST(Factor, ThirteenOverZ9) {
  const XnFactorization f = factor_xn_minus_1(k3, 13);
  EXPECT_EQ(factor_strings(f),
            (std::set<std::string>{"x+8", "x^3+6x^2+2x+8", "x^3+7x^2+3x+8", "x^3+4x^2+7x+8",
                                   "x^3+2x^2+5x+8"}));
}

TEST(Factor, ElevenOverZ9) {
  const XnFactorization f = factor_xn_minus_1(k3, 11);
  EXPECT_EQ(factor_strings(f),
            (std::set<std::string>{"x+8", "x^5+3x^4+8x^3+x^2+2x+8", "x^5+7x^4+8x^3+x^2+6x+8"}));
}

TEST(Factor, TrivialLength) {
  const XnFactorization f = factor_xn_minus_1(k3, 1);
  ASSERT_EQ(f.size(), 1);
  EXPECT_EQ(f.factors()[0].lifted, P2("x-1"));
}

TEST(Factor, RejectsLengthDivisibleByP) { EXPECT_THROW(factor_xn_minus_1(k3, 3), Error); }

TEST(Factor, ProductAndIrreducibility) {
  for (int p : {2, 3, 5, 7}) {
    const PrimeBase b(p);
    for (int n = 1; n <= 26; ++n) {
      if (n % p == 0) continue;
      const XnFactorization f = factor_xn_minus_1(b, n);
      EXPECT_EQ(f.product(f.full_mask()), PolyP2::xn_minus_one(b, n)) << p << " " << n;
      for (const XnFactor& x : f.factors()) {
        EXPECT_TRUE(is_irreducible(reduce_mod_p(x.lifted)));
        EXPECT_EQ(hensel_lift(reduce_mod_p(x.lifted), n), x.lifted);
        EXPECT_EQ(static_cast<int>(x.coset.size()), x.lifted.degree());
      }
    }
  }
}

TEST(Hensel, DeclaredFactors) {
  EXPECT_EQ(hensel_lift(reduce_mod_p(P2("x^5+3x^4-x^3+x^2+2x-1")), 11),
            P2("x^5+3x^4-x^3+x^2+2x-1"));
  EXPECT_EQ(hensel_lift(P1("x-1"), 7), P2("x-1"));
  EXPECT_EQ(hensel_lift(reduce_mod_p(P2("x^3+6x^2+2x+8")), 13), P2("x^3+6x^2+2x+8"));
}

TEST(ExponentSet, Examples) {
  const XnFactorization f = factor_xn_minus_1(k3, 11);
  std::vector<int> all(11);
  for (int i = 0; i < 11; ++i) all[i] = i;
  EXPECT_EQ(exponent_set_of(PolyP::xn_minus_one(k3, 11), f), all);
  EXPECT_EQ(exponent_set_of(P1("x-1"), f), std::vector<int>{0});
  // Exactly one of the two quintic factors has root xi.
  const PolyP f1 = reduce_mod_p(P2("x^5+3x^4-x^3+x^2+2x-1"));
  const PolyP f2 = reduce_mod_p(P2("x^5+7x^4-x^3+x^2+6x-1"));
  const std::vector<int> c1{1, 3, 4, 5, 9}, c2{2, 6, 7, 8, 10};
  const std::vector<int> e1 = exponent_set_of(f1, f), e2 = exponent_set_of(f2, f);
  EXPECT_TRUE((e1 == c1 && e2 == c2) || (e1 == c2 && e2 == c1));
  EXPECT_THROW(exponent_set_of(P1("x^2+1"), f), Error);
}

TEST(ExponentSet, ClosedUnderP) {
  for (int p : {2, 3, 5}) {
    const PrimeBase b(p);
    for (int n : {5, 7, 11, 13}) {
      if (n % p == 0) continue;
      const XnFactorization f = factor_xn_minus_1(b, n);
      for (const PolyP& d : divisors_of_xn_minus_1(b, n)) {
        const std::vector<int> e = exponent_set_of(d, f);
        EXPECT_EQ(static_cast<int>(e.size()), d.degree());
        const std::set<int> s(e.begin(), e.end());
        for (int x : e) EXPECT_TRUE(s.count(x * p % n));
      }
    }
  }
}

TEST(CircleProduct, Examples) {
  const XnFactorization f = factor_xn_minus_1(k3, 11);
  const PolyP f1 = reduce_mod_p(P2("x^5+3x^4-x^3+x^2+2x-1"));
  const PolyP f2 = reduce_mod_p(P2("x^5+7x^4-x^3+x^2+6x-1"));
  const PolyP full = PolyP::xn_minus_one(k3, 11);
  const PolyP q = poly_divmod(full, P1("x-1")).quotient;
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(circle_product(P1("x-1"), j, f), P1("x-1"));
  EXPECT_EQ(circle_product(f1, 1, f), f1);
  EXPECT_EQ(circle_product(f1, 2, f), q);
  EXPECT_EQ(circle_product(f2, 2, f), q);
  EXPECT_EQ(circle_product(f1, 3, f), full);
  EXPECT_EQ(circle_product(f2, 3, f), full);
  EXPECT_EQ(poly_gcd(f1, circle_product(f2, 2, f)), f1);
  EXPECT_EQ(poly_gcd(f2, circle_product(f1, 2, f)), f2);
}

TEST(CircleProduct, MatchesSplittingFieldOracle) {
  for (int p : {3, 5}) {
    const PrimeBase b(p);
    for (int n : {5, 7, 11, 13}) {
      if (n % p == 0) continue;  // x^n - 1 has repeated roots
      const XnFactorization f = factor_xn_minus_1(b, n);
      const oracle::Splitting field(p, n);
      const std::vector<std::vector<int>> divisors = field.all_divisors();
      EXPECT_EQ(divisors.size(), divisors_of_xn_minus_1(b, n).size());
      for (const std::vector<int>& d : divisors) {
        const PolyP c(b, d);
        for (int j : {2, 3}) {
          EXPECT_EQ(circle_product(c, j, f), PolyP(b, field.circle(d, j)))
              << "p=" << p << " n=" << n << " c=" << c.str() << " j=" << j;
        }
      }
    }
  }
}

TEST(DivisorsOverP2, Examples) {
  const XnFactorization f = factor_xn_minus_1(k3, 11);
  const PolyP2 f1 = P2("x^5+3x^4-x^3+x^2+2x-1");
  EXPECT_EQ(divisors_over_p2(P2("1"), f), std::vector<PolyP2>{P2("1")});
  EXPECT_EQ(divisors_over_p2(f1, f), (std::vector<PolyP2>{P2("1"), f1}));
  EXPECT_EQ(divisors_over_p2(P2("x-1") * f1, f),
            (std::vector<PolyP2>{P2("1"), P2("x-1"), f1, P2("x-1") * f1}));
  EXPECT_THROW(divisors_over_p2(P2("x^2+1"), f), Error);
}

TEST(DivisorsOverP2, GcdLcmOfCoprimeFactors) {
  const XnFactorization f = factor_xn_minus_1(k3, 11);
  const PolyP2 f2 = P2("x^5+7x^4-x^3+x^2+6x-1");
  EXPECT_EQ(divisor_lcm(P2("x-1"), f2, f), P2("x-1") * f2);
  EXPECT_TRUE(divisor_gcd(P2("x-1"), f2, f).is_one());
}

}  // namespace
}  // namespace addcyc
