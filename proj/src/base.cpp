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

#include "base.hpp"

#include <numeric>

namespace addcyc {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNonMonicDivisor: return "NonMonicDivisor";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kZeroInput: return "ZeroInput";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kNotAProductOfFactors: return "NotAProductOfFactors";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kHypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::kIncompatibleF: return "IncompatibleF";
    case ErrorCode::kNotADivisorOfG: return "NotADivisorOfG";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNonPowerCardinality: return "NonPowerCardinality";
    case ErrorCode::kStructuralMismatch: return "StructuralMismatch";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_name(code)) + ": " + what);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeBase::PrimeBase(int p) {
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (p > 13) fail(ErrorCode::kOutOfRange, "p must be at most 13");
  p_ = p;
  p2_ = p * p;
}

int PrimeBase::inv_p(int v) const {
  v = mod_p(v);
  if (v == 0) fail(ErrorCode::kInvalidArgument, "zero has no inverse mod p");
  for (int t = 1; t < p_; ++t) {
    if (v * t % p_ == 1) return t;
  }
  fail(ErrorCode::kInvalidArgument, "no inverse");
}

int PrimeBase::inv_p2(int v) const {
  v = mod_p2(v);
  if (v % p_ == 0) fail(ErrorCode::kInvalidArgument, "non-unit in Z_{p^2}");
  for (int t = 1; t < p2_; ++t) {
    if (v * t % p2_ == 1) return t;
  }
  fail(ErrorCode::kInvalidArgument, "no inverse");
}

long long gcd_int(long long a, long long b) { return std::gcd(a, b); }

long long lcm_int(long long a, long long b) { return std::lcm(a, b); }

bool fits_power(int p, int e, uint64_t budget) {
  uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > budget / p) return false;
    v *= p;
  }
  return true;
}

uint64_t ipow_capped(uint64_t base, int exp, uint64_t cap) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) {
      fail(ErrorCode::kOutOfRange, "power exceeds cap");
    }
    r *= base;
  }
  if (r > cap) fail(ErrorCode::kOutOfRange, "power exceeds cap");
  return r;
}

std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

int mult_order(int p, int n) {
  if (n == 1) return 1;
  if (gcd_int(p, n) != 1) fail(ErrorCode::kNotCoprime, "order needs gcd(p, n) = 1");
  long long v = p % n;
  int k = 1;
  while (v != 1) {
    v = v * p % n;
    ++k;
  }
  return k;
}

}  // namespace addcyc
