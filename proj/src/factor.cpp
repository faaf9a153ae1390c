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

#include "factor.hpp"

#include <algorithm>
#include <set>

namespace addcyc {

namespace {

PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& m) {
  return poly_divmod(a * b, m).remainder;
}

PolyP powmod(PolyP a, uint64_t e, const PolyP& m) {
  PolyP r = poly_divmod(PolyP::constant(m.base(), 1), m).remainder;
  a = poly_divmod(a, m).remainder;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// y^(p^k) mod f by k Frobenius steps.
PolyP frobenius_power(const PolyP& f, int k) {
  PolyP y = PolyP::monomial(f.base(), 1);
  PolyP r = poly_divmod(y, f).remainder;
  for (int i = 0; i < k; ++i) r = powmod(r, f.base().p(), f);
  return r;
}

}  // namespace

bool is_irreducible(const PolyP& f) {
  const int m = f.degree();
  if (m <= 0) return false;
  if (m == 1) return true;
  const PolyP y = PolyP::monomial(f.base(), 1);
  if (frobenius_power(f, m) != poly_divmod(y, f).remainder) return false;
  for (int q : prime_divisors(m)) {
    PolyP t = frobenius_power(f, m / q) - y;
    if (t.is_zero() || !poly_gcd(t, f).is_one()) return false;
  }
  return true;
}

ExtField::ExtField(const PrimeBase& base, int m) : base_(base), m_(m) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  order_ = 1;
  for (int i = 0; i < m; ++i) {
    order_ *= static_cast<unsigned>(base.p());
    if (order_ > (static_cast<unsigned __int128>(1) << 120)) {
      fail(ErrorCode::kOutOfRange, "extension field too large");
    }
  }
  // Lex-first monic irreducible of degree m.
  std::vector<int> digits(m, 0);
  for (;;) {
    std::vector<int> c = digits;
    c.push_back(1);
    PolyP cand(base, c);
    if (is_irreducible(cand)) {
      mod_ = cand;
      break;
    }
    int i = 0;
    while (i < m && ++digits[i] == base.p()) digits[i++] = 0;
    if (i == m) fail(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
  }
}

ExtField::Elem ExtField::one() const { return from_int(1); }

ExtField::Elem ExtField::from_int(int c) const {
  Elem e(m_, 0);
  e[0] = base_.mod_p(c);
  return e;
}

ExtField::Elem ExtField::from_index(uint64_t idx) const {
  Elem e(m_, 0);
  for (int i = 0; i < m_ && idx; ++i) {
    e[i] = static_cast<int>(idx % base_.p());
    idx /= base_.p();
  }
  return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(m_);
  for (int i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) % base_.p();
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(m_);
  for (int i = 0; i < m_; ++i) r[i] = (a[i] - b[i] + base_.p()) % base_.p();
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  PolyP r = poly_divmod(PolyP(base_, a) * PolyP(base_, b), mod_).remainder;
  Elem e(m_, 0);
  for (int i = 0; i <= r.degree(); ++i) e[i] = r.coeffs()[i];
  return e;
}

ExtField::Elem ExtField::pow(const Elem& a, unsigned __int128 e) const {
  Elem r = one();
  Elem s = a;
  while (e) {
    if (e & 1) r = mul(r, s);
    s = mul(s, s);
    e >>= 1;
  }
  return r;
}

bool ExtField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

bool ExtField::is_one(const Elem& a) const {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](int v) { return v == 0; });
}

int ExtField::as_scalar(const Elem& a) const {
  for (int i = 1; i < m_; ++i) {
    if (a[i] != 0) return -1;
  }
  return a[0];
}

PolyP2 XnFactorization::product(uint64_t mask) const {
  PolyP2 r = PolyP2::constant(base_, 1);
  for (int i = 0; i < size(); ++i) {
    if (mask >> i & 1) r = r * factors_[i].lifted;
  }
  return r;
}

PolyP XnFactorization::product_mod_p(uint64_t mask) const {
  return reduce_mod_p(product(mask));
}

uint64_t XnFactorization::mask_of(const PolyP2& u) const {
  if (u.is_zero() || !u.is_monic()) {
    fail(ErrorCode::kNotAProductOfFactors, u.str() + " is not monic");
  }
  uint64_t mask = 0;
  for (int i = 0; i < size(); ++i) {
    if (divides(factors_[i].lifted, u)) mask |= 1ULL << i;
  }
  if (product(mask) != u) {
    fail(ErrorCode::kNotAProductOfFactors,
         u.str() + " is not a product of basic irreducible factors of x^" +
             std::to_string(n_) + "-1");
  }
  return mask;
}

uint64_t XnFactorization::mask_of(const PolyP& u) const {
  if (u.is_zero()) fail(ErrorCode::kNotADivisor, "zero is not a divisor");
  const PolyP mu = monic(u);
  uint64_t mask = 0;
  for (int i = 0; i < size(); ++i) {
    if (divides(reduce_mod_p(factors_[i].lifted), mu)) mask |= 1ULL << i;
  }
  if (product_mod_p(mask) != mu) {
    fail(ErrorCode::kNotADivisor,
         u.str() + " does not divide x^" + std::to_string(n_) + "-1 over Z_" +
             std::to_string(base_.p()));
  }
  return mask;
}

std::vector<uint64_t> XnFactorization::divisor_masks(uint64_t mask) const {
  std::vector<std::pair<PolyP2, uint64_t>> all;
  for (uint64_t s = mask;; s = (s - 1) & mask) {
    all.emplace_back(product(s), s);
    if (s == 0) break;
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<uint64_t> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(e.second);
  return out;
}

std::vector<std::vector<int>> cyclotomic_cosets(int p, int n) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    int e = s;
    while (!seen[e]) {
      seen[e] = true;
      c.push_back(e);
      e = static_cast<int>(static_cast<long long>(e) * p % n);
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

XnFactorization factor_xn_minus_1(const PrimeBase& base, int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (n % base.p() == 0) {
    fail(ErrorCode::kNotCoprime,
         "p = " + std::to_string(base.p()) + " divides n = " + std::to_string(n));
  }
  const int m = mult_order(base.p(), n);
  ExtField field(base, m);
  // Element of exact multiplicative order n.
  const unsigned __int128 cofactor = (field.order() - 1) / n;
  const std::vector<int> qs = prime_divisors(n);
  ExtField::Elem xi;
  for (uint64_t idx = 1;; ++idx) {
    ExtField::Elem z = field.from_index(idx);
    if (field.is_zero(z)) continue;
    ExtField::Elem w = field.pow(z, cofactor);
    bool ok = true;
    for (int q : qs) {
      if (field.is_one(field.pow(w, n / q))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      xi = w;
      break;
    }
  }
  std::vector<XnFactor> factors;
  for (const auto& coset : cyclotomic_cosets(base.p(), n)) {
    std::vector<ExtField::Elem> poly{field.one()};
    for (int s : coset) {
      ExtField::Elem r = field.pow(xi, s);
      std::vector<ExtField::Elem> next(poly.size() + 1, field.zero());
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = field.add(next[i + 1], poly[i]);
        next[i] = field.sub(next[i], field.mul(r, poly[i]));
      }
      poly = std::move(next);
    }
    std::vector<int> coeffs;
    for (const auto& c : poly) {
      const int v = field.as_scalar(c);
      if (v < 0) fail(ErrorCode::kInvalidArgument, "minimal polynomial not over Z_p");
      coeffs.push_back(v);
    }
    PolyP fbar(base, coeffs);
    factors.push_back({hensel_lift(fbar, n), coset});
  }
  std::sort(factors.begin(), factors.end(),
            [](const XnFactor& a, const XnFactor& b) { return a.lifted < b.lifted; });
  XnFactorization out(base, n, std::move(factors));
  if (out.product(out.full_mask()) != PolyP2::xn_minus_one(base, n)) {
    fail(ErrorCode::kInvalidArgument, "factor product check failed");
  }
  return out;
}

PolyP2 hensel_lift(const PolyP& fbar, int n) {
  const PrimeBase& b = fbar.base();
  if (fbar.is_zero() || !fbar.is_monic()) {
    fail(ErrorCode::kNotADivisor, fbar.str() + " is not monic");
  }
  if (n % b.p() == 0) fail(ErrorCode::kNotCoprime, "p divides n");
  const PolyP xn = PolyP::xn_minus_one(b, n);
  DivModP qr = poly_divmod(xn, fbar);
  if (!qr.remainder.is_zero()) {
    fail(ErrorCode::kNotADivisor,
         fbar.str() + " does not divide x^" + std::to_string(n) + "-1 mod p");
  }
  if (fbar.degree() == 0) return PolyP2::constant(b, 1);
  // x^n - 1 = f0 q0 + p e over Z_{p^2}; correct f0 by p (e s mod fbar).
  const PolyP2 f0 = lift(fbar);
  const PolyP2 q0 = lift(qr.quotient);
  const PolyP e = divide_by_p(PolyP2::xn_minus_one(b, n) - f0 * q0);
  const PolyP s = poly_inverse_mod(qr.quotient, fbar);
  const PolyP d = poly_divmod(e * s, fbar).remainder;
  const PolyP2 F = f0 + lift(d).scaled(b.p());
  if (!divides(F, PolyP2::xn_minus_one(b, n))) {
    fail(ErrorCode::kNotADivisor, "Hensel correction failed for " + fbar.str());
  }
  return F;
}

std::vector<int> exponent_set_of(const PolyP& divisor, const XnFactorization& fact) {
  const uint64_t mask = fact.mask_of(divisor);
  std::vector<int> out;
  for (int i = 0; i < fact.size(); ++i) {
    if (mask >> i & 1) {
      out.insert(out.end(), fact.factors()[i].coset.begin(), fact.factors()[i].coset.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyP circle_product(const PolyP& c, int j, const XnFactorization& fact) {
  if (j < 1) fail(ErrorCode::kInvalidArgument, "circle product needs j >= 1");
  const int n = fact.n();
  const std::vector<int> e = exponent_set_of(c, fact);
  std::vector<bool> acc(n, false);
  for (int x : e) acc[x] = true;
  for (int step = 1; step < j; ++step) {
    std::vector<bool> next(n, false);
    for (int s = 0; s < n; ++s) {
      if (!acc[s]) continue;
      for (int x : e) next[(s + x) % n] = true;
    }
    acc = std::move(next);
  }
  uint64_t mask = 0;
  for (int i = 0; i < fact.size(); ++i) {
    if (acc[fact.factors()[i].coset.front()]) mask |= 1ULL << i;
  }
  return fact.product_mod_p(mask);
}

std::vector<PolyP2> divisors_over_p2(const PolyP2& g, const XnFactorization& fact) {
  const uint64_t mask = fact.mask_of(g);
  std::vector<PolyP2> out;
  for (uint64_t s : fact.divisor_masks(mask)) out.push_back(fact.product(s));
  return out;
}

PolyP2 divisor_gcd(const PolyP2& u, const PolyP2& v, const XnFactorization& fact) {
  return fact.product(fact.mask_of(u) & fact.mask_of(v));
}

PolyP2 divisor_lcm(const PolyP2& u, const PolyP2& v, const XnFactorization& fact) {
  return fact.product(fact.mask_of(u) | fact.mask_of(v));
}

}  // namespace addcyc
