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

#ifndef ADDCYC_BASE_HPP_
#define ADDCYC_BASE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace addcyc {

enum class ErrorCode {
  kInvalidArgument = 1,
  kNotPrime,
  kNonMonicDivisor,
  kBothZero,
  kZeroInput,
  kNotCoprime,
  kNotADivisor,
  kNotAProductOfFactors,
  kLengthMismatch,
  kOutOfRange,
  kInvalidSpec,
  kParse,
  kHypothesisUnmet,
  kIncompatibleF,
  kNotADivisorOfG,
  kBudgetExceeded,
  kNonPowerCardinality,
  kStructuralMismatch,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Z_p together with Z_{p^2}. Symbols are stored as uint8_t, hence p <= 13.
class PrimeBase {
 public:
  PrimeBase() = default;
  explicit PrimeBase(int p);

  int p() const { return p_; }
  int p2() const { return p2_; }

  int mod_p(long long v) const { return static_cast<int>(((v % p_) + p_) % p_); }
  int mod_p2(long long v) const {
    return static_cast<int>(((v % p2_) + p2_) % p2_);
  }
  int inv_p(int v) const;
  int inv_p2(int v) const;

  bool operator==(const PrimeBase& o) const { return p_ == o.p_; }

 private:
  int p_ = 0;
  int p2_ = 0;
};

bool is_prime(long long n);
long long gcd_int(long long a, long long b);
long long lcm_int(long long a, long long b);
// Exact power; throws kOutOfRange above `cap`.
uint64_t ipow_capped(uint64_t base, int exp, uint64_t cap);
// p^e <= budget.
bool fits_power(int p, int e, uint64_t budget);
std::vector<int> prime_divisors(long long n);
// Multiplicative order of p modulo n (n >= 1, gcd(p, n) = 1).
int mult_order(int p, int n);

struct RunConfig {
  uint64_t residue_budget = 531441;  // 3^12
  uint64_t word_budget = 1ULL << 22;
  // Exhaustive residue-pair scans stop being attempted beyond this many
  // pairs inside structural searches; the low-degree spanning set is used.
  uint64_t pair_budget = 1ULL << 27;
  int workers = 1;
  uint64_t seed = 20260101;
};

}  // namespace addcyc

#endif  // ADDCYC_BASE_HPP_
