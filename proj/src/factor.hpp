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

// Factorization of x^n - 1 over Z_{p^2}, Hensel lifting, circle products
// and divisor lattices.

#ifndef ADDCYC_FACTOR_HPP_
#define ADDCYC_FACTOR_HPP_

#include <cstdint>
#include <vector>

#include "poly.hpp"

namespace addcyc {

// GF(p^m) as Z_p[y]/(mod). Elements are length-m coefficient vectors.
class ExtField {
 public:
  using Elem = std::vector<int>;

  ExtField(const PrimeBase& base, int m);  // picks the lex-first irreducible

  int degree() const { return m_; }
  const PolyP& modulus() const { return mod_; }
  Elem zero() const { return Elem(m_, 0); }
  Elem one() const;
  Elem from_int(int c) const;
  // The element whose base-p digits (low first) are the coefficients.
  Elem from_index(uint64_t idx) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned __int128 e) const;
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  // Non-negative value if a lies in the prime field, else -1.
  int as_scalar(const Elem& a) const;
  unsigned __int128 order() const { return order_; }  // p^m

 private:
  PrimeBase base_;
  int m_;
  PolyP mod_;
  unsigned __int128 order_;
};

bool is_irreducible(const PolyP& f);

struct XnFactor {
  PolyP2 lifted;
  std::vector<int> coset;  // sorted exponents
};

class XnFactorization {
 public:
  XnFactorization() = default;
  XnFactorization(const PrimeBase& base, int n, std::vector<XnFactor> factors)
      : base_(base), n_(n), factors_(std::move(factors)) {}

  const PrimeBase& base() const { return base_; }
  int n() const { return n_; }
  const std::vector<XnFactor>& factors() const { return factors_; }
  int size() const { return static_cast<int>(factors_.size()); }

  // Product of the selected lifted factors (bit i selects factor i).
  PolyP2 product(uint64_t mask) const;
  PolyP product_mod_p(uint64_t mask) const;
  // Subset of factors whose product is exactly u; throws otherwise.
  uint64_t mask_of(const PolyP2& u) const;
  uint64_t mask_of(const PolyP& u) const;
  uint64_t full_mask() const {
    return factors_.size() >= 64 ? ~0ULL : (1ULL << factors_.size()) - 1;
  }
  // Sorted list of all divisor masks of `mask`, ordered by (degree, lex).
  std::vector<uint64_t> divisor_masks(uint64_t mask) const;

 private:
  PrimeBase base_;
  int n_ = 0;
  std::vector<XnFactor> factors_;
};

std::vector<std::vector<int>> cyclotomic_cosets(int p, int n);

XnFactorization factor_xn_minus_1(const PrimeBase& base, int n);

PolyP2 hensel_lift(const PolyP& fbar, int n);

std::vector<int> exponent_set_of(const PolyP& divisor, const XnFactorization& fact);

PolyP circle_product(const PolyP& c, int j, const XnFactorization& fact);

std::vector<PolyP2> divisors_over_p2(const PolyP2& g, const XnFactorization& fact);

// gcd / lcm of monic divisors of x^n - 1 over Z_{p^2}, via factor subsets.
PolyP2 divisor_gcd(const PolyP2& u, const PolyP2& v, const XnFactorization& fact);
PolyP2 divisor_lcm(const PolyP2& u, const PolyP2& v, const XnFactorization& fact);

}  // namespace addcyc

#endif  // ADDCYC_FACTOR_HPP_
