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

// Codes shared by several test files.

#ifndef ADDCYC_TESTS_FIXTURES_HPP_
#define ADDCYC_TESTS_FIXTURES_HPP_

#include <memory>
#include <string>

#include "code.hpp"

namespace fixtures {

using addcyc::CodeSpec;
using addcyc::PolyP;
using addcyc::PolyP2;
using addcyc::PrimeBase;
using addcyc::Ring;

// The two quintic factors of x^11 - 1 over Z_9.
inline const char* kF1 = "x^5+3x^4-x^3+x^2+2x-1";
inline const char* kF2 = "x^5+7x^4-x^3+x^2+6x-1";

inline CodeSpec spec(int p, int alpha, int beta, const std::string& a, const std::string& b,
                     const std::string& f, const std::string& h, const std::string& g) {
  const PrimeBase base(p);
  return CodeSpec::make(base, alpha, beta, addcyc::parse_poly<Ring::kZp>(base, a),
                        addcyc::parse_poly<Ring::kZp>(base, b),
                        addcyc::parse_poly<Ring::kZp2>(base, f),
                        addcyc::parse_poly<Ring::kZp2>(base, h),
                        addcyc::parse_poly<Ring::kZp2>(base, g));
}

// <(x-1, 0), (b, f1 (x-1) + 3 f1)> over Z_3 x Z_9, alpha = 2, beta = 11;
// twin swaps f1 and f2.
inline CodeSpec example11(const std::string& b, bool twin = false) {
  return spec(3, 2, 11, "x-1", b, twin ? kF2 : kF1, "x-1", twin ? kF1 : kF2);
}

// <x - 1> over Z_9 with beta = 5.
inline CodeSpec q5() { return spec(3, 0, 5, "1", "0", "x-1", "1", "x^4+x^3+x^2+x+1"); }

}  // namespace fixtures

#endif  // ADDCYC_TESTS_FIXTURES_HPP_
