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

// Dense polynomials over Z_p and Z_{p^2}.

#ifndef ADDCYC_POLY_HPP_
#define ADDCYC_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "base.hpp"

namespace addcyc {

enum class Ring { kZp, kZp2 };

template <Ring R>
class Poly {
 public:
  Poly() = default;
  // Coefficients ascending; reduced into range and trimmed.
  Poly(const PrimeBase& base, std::vector<int> coeffs);

  static Poly zero(const PrimeBase& base) { return Poly(base, {}); }
  static Poly constant(const PrimeBase& base, int c) { return Poly(base, {c}); }
  static Poly monomial(const PrimeBase& base, int deg, int c = 1);
  // x^n - 1
  static Poly xn_minus_one(const PrimeBase& base, int n);

  const PrimeBase& base() const { return base_; }
  int modulus() const { return R == Ring::kZp ? base_.p() : base_.p2(); }
  const std::vector<int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  int lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return lead() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(int s) const;
  Poly shifted(int k) const;  // multiply by x^k
  // Fold exponents modulo n, i.e. reduce in R[x]/(x^n - 1).
  Poly mod_xn(int n) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // Canonical order: degree first, then ascending coefficients.
  bool operator<(const Poly& o) const;

  std::string str() const;

 private:
  void normalize();

  PrimeBase base_;
  std::vector<int> c_;
};

using PolyP = Poly<Ring::kZp>;
using PolyP2 = Poly<Ring::kZp2>;

struct DivMod2 {
  PolyP2 quotient;
  PolyP2 remainder;
};
struct DivModP {
  PolyP quotient;
  PolyP remainder;
};

DivMod2 poly_divmod_monic(const PolyP2& dividend, const PolyP2& divisor);
DivModP poly_divmod(const PolyP& dividend, const PolyP& divisor);
bool divides(const PolyP2& d, const PolyP2& u);
bool divides(const PolyP& d, const PolyP& u);
PolyP monic(const PolyP& u);
PolyP poly_gcd(const PolyP& u, const PolyP& v);
PolyP poly_lcm(const PolyP& u, const PolyP& v);

struct XGcd {
  PolyP g, s, t;  // s*u + t*v = g, g monic
};
XGcd poly_xgcd(const PolyP& u, const PolyP& v);
// Inverse of u modulo m (gcd must be 1).
PolyP poly_inverse_mod(const PolyP& u, const PolyP& m);

PolyP reduce_mod_p(const PolyP2& u);
// Integer lift with coefficients in [0, p).
PolyP2 lift(const PolyP& u);
// Exact division by p of a polynomial with all coefficients in pZ.
PolyP divide_by_p(const PolyP2& u);

template <Ring R>
Poly<R> parse_poly(const PrimeBase& base, const std::string& text);

}  // namespace addcyc

#endif  // ADDCYC_POLY_HPP_
