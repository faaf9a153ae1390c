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

// Gray map, carries, and linearity of Gray images.

#ifndef ADDCYC_GRAY_HPP_
#define ADDCYC_GRAY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "code.hpp"

namespace addcyc {

struct GrayWord {
  Vec entries;  // length alpha + p*beta
  // Unpadded digit string, e.g. "10120".
  std::string str() const;
  bool operator==(const GrayWord& o) const = default;
};

// theta = theta0 * p + theta1  ->  theta0 (1,...,1) + theta1 (0,1,...,p-1)
Vec gray_scalar(const PrimeBase& base, int theta);
GrayWord gray_word(const MixedWord& w, const PrimeBase& base);
// Same map applied to an embedded row.
Vec gray_row(const Row& r, int alpha, const PrimeBase& base);

int carry_scalar(const PrimeBase& base, int u, int v);

class CarryTable {
 public:
  explicit CarryTable(const PrimeBase& base);
  int at(int u, int v) const { return t_[(u % p_) * p_ + v % p_]; }
  int p() const { return p_; }

 private:
  int p_;
  std::vector<uint8_t> t_;
};

// (0, p * P(u_Y, v_Y)); carries vanish on the X side.
MixedWord carry_vector(const MixedWord& u, const MixedWord& v, const PrimeBase& base);

// Phi(u + v) == Phi(u) + Phi(v) + Phi(p P(u, v))
bool gray_identity_check(const MixedWord& u, const MixedWord& v, const PrimeBase& base);

// The closed-form carry polynomial
//   sum_{k=1}^{p-1} sum_{b=p-k}^{p-1} prod_{m != k}(u - m) prod_{m != b}(v - m)
// over Z_p, as coefficients c[i][j] of u^i v^j.
std::vector<std::vector<int>> carry_polynomial(int p);
// Total degree of carry_polynomial(p): the minimal degree of any carry interpolant.
int carry_degree(int p);
// Evaluates carry_polynomial on all p^4 pairs of Z_{p^2} and compares with
// carry_scalar.
bool verify_carry_polynomial(const PrimeBase& base);

enum class ScanMode { kExhaustive, kReduced, kAuto };

struct LinearityResult {
  bool linear = true;
  // Method actually used.
  ScanMode mode = ScanMode::kExhaustive;
  uint64_t pairs_scanned = 0;
  // Codewords u, v with p P(u, v) not in C, when nonlinear.
  std::optional<MixedWord> witness_u, witness_v, witness_carry;
};

LinearityResult gray_image_linearity(const AdditiveCode& code, ScanMode mode,
                                     const RunConfig& cfg);
bool is_gray_image_linear(const CodeSpec& spec, const RunConfig& cfg = {},
                          ScanMode mode = ScanMode::kAuto);

// gcd(f', circle_product(gbar, j)) == 1 with f' = fbar * a / gcd(a, bbar gbar).
// Sufficient for linearity; throws kHypothesisUnmet when (x - 1) does not divide g.
bool linearity_sufficient_gcd(const CodeSpec& spec, int j);

}  // namespace addcyc

#endif  // ADDCYC_GRAY_HPP_
