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

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace addcyc {

template <Ring R>
Poly<R>::Poly(const PrimeBase& base, std::vector<int> coeffs)
    : base_(base), c_(std::move(coeffs)) {
  normalize();
}

template <Ring R>
void Poly<R>::normalize() {
  const int m = modulus();
  if (m == 0) {
    c_.clear();
    return;
  }
  for (int& v : c_) v = ((v % m) + m) % m;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

template <Ring R>
Poly<R> Poly<R>::monomial(const PrimeBase& base, int deg, int c) {
  std::vector<int> v(deg + 1, 0);
  v[deg] = c;
  return Poly(base, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::xn_minus_one(const PrimeBase& base, int n) {
  std::vector<int> v(n + 1, 0);
  v[0] = -1;
  v[n] += 1;
  return Poly(base, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::operator+(const Poly& o) const {
  std::vector<int> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(base_.p() ? base_ : o.base_, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::operator-(const Poly& o) const {
  std::vector<int> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Poly(base_.p() ? base_ : o.base_, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::operator-() const {
  return Poly(base_, {}) - *this;
}

template <Ring R>
Poly<R> Poly<R>::operator*(const Poly& o) const {
  const PrimeBase& b = base_.p() ? base_ : o.base_;
  if (c_.empty() || o.c_.empty()) return Poly(b, {});
  std::vector<long long> acc(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += c_[i] * o.c_[j];
  }
  const int m = R == Ring::kZp ? b.p() : b.p2();
  std::vector<int> v(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<int>(acc[i] % m);
  return Poly(b, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::scaled(int s) const {
  std::vector<int> v = c_;
  for (int& x : v) x *= s;
  return Poly(base_, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::shifted(int k) const {
  if (c_.empty()) return *this;
  std::vector<int> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(base_, std::move(v));
}

template <Ring R>
Poly<R> Poly<R>::mod_xn(int n) const {
  if (n <= 0) fail(ErrorCode::kInvalidArgument, "mod_xn needs n >= 1");
  std::vector<int> v(std::min<size_t>(n, c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i % n] += c_[i];
  return Poly(base_, std::move(v));
}

template <Ring R>
bool Poly<R>::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(),
                                      o.c_.end());
}

template <Ring R>
std::string Poly<R>::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const int c = c_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

template class Poly<Ring::kZp>;
template class Poly<Ring::kZp2>;

DivMod2 poly_divmod_monic(const PolyP2& dividend, const PolyP2& divisor) {
  if (divisor.is_zero() || !divisor.is_monic()) {
    fail(ErrorCode::kNonMonicDivisor, "divisor " + divisor.str() + " is not monic");
  }
  const PrimeBase& b = divisor.base();
  std::vector<int> r = dividend.coeffs();
  const int dd = divisor.degree();
  const int m = b.p2();
  if (static_cast<int>(r.size()) - 1 < dd) return {PolyP2::zero(b), dividend};
  std::vector<int> q(r.size() - dd, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    const int c = ((r[i] % m) + m) % m;
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      r[i - dd + j] = (r[i - dd + j] - c * divisor.coeffs()[j]) % m;
    }
  }
  r.resize(dd);
  return {PolyP2(b, std::move(q)), PolyP2(b, std::move(r))};
}

DivModP poly_divmod(const PolyP& dividend, const PolyP& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::kZeroInput, "division by zero polynomial");
  const PrimeBase& b = divisor.base();
  const int p = b.p();
  const int inv = b.inv_p(divisor.lead());
  std::vector<int> r = dividend.coeffs();
  const int dd = divisor.degree();
  if (static_cast<int>(r.size()) - 1 < dd) return {PolyP::zero(b), dividend};
  std::vector<int> q(r.size() - dd, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    const int c = (((r[i] % p) + p) % p) * inv % p;
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      r[i - dd + j] = (r[i - dd + j] - c * divisor.coeffs()[j]) % p;
    }
  }
  r.resize(dd);
  return {PolyP(b, std::move(q)), PolyP(b, std::move(r))};
}

bool divides(const PolyP2& d, const PolyP2& u) {
  return poly_divmod_monic(u, d).remainder.is_zero();
}

bool divides(const PolyP& d, const PolyP& u) {
  return poly_divmod(u, d).remainder.is_zero();
}

PolyP monic(const PolyP& u) {
  if (u.is_zero()) return u;
  return u.scaled(u.base().inv_p(u.lead()));
}

PolyP poly_gcd(const PolyP& u, const PolyP& v) {
  if (u.is_zero() && v.is_zero()) fail(ErrorCode::kBothZero, "gcd(0, 0)");
  PolyP a = u, b = v;
  while (!b.is_zero()) {
    PolyP r = poly_divmod(a, b).remainder;
    a = b;
    b = r;
  }
  return monic(a);
}

PolyP poly_lcm(const PolyP& u, const PolyP& v) {
  if (u.is_zero() || v.is_zero()) fail(ErrorCode::kZeroInput, "lcm with zero");
  return monic(poly_divmod(u * v, poly_gcd(u, v)).quotient);
}

XGcd poly_xgcd(const PolyP& u, const PolyP& v) {
  if (u.is_zero() && v.is_zero()) fail(ErrorCode::kBothZero, "xgcd(0, 0)");
  const PrimeBase& b = u.is_zero() ? v.base() : u.base();
  PolyP r0 = u, r1 = v;
  PolyP s0 = PolyP::constant(b, 1), s1 = PolyP::zero(b);
  PolyP t0 = PolyP::zero(b), t1 = PolyP::constant(b, 1);
  while (!r1.is_zero()) {
    DivModP qr = poly_divmod(r0, r1);
    PolyP r2 = qr.remainder;
    PolyP s2 = s0 - qr.quotient * s1;
    PolyP t2 = t0 - qr.quotient * t1;
    r0 = r1, r1 = r2;
    s0 = s1, s1 = s2;
    t0 = t1, t1 = t2;
  }
  const int inv = b.inv_p(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

PolyP poly_inverse_mod(const PolyP& u, const PolyP& m) {
  XGcd x = poly_xgcd(poly_divmod(u, m).remainder, m);
  if (!x.g.is_one()) fail(ErrorCode::kNotCoprime, u.str() + " not invertible mod " + m.str());
  return poly_divmod(x.s, m).remainder;
}

PolyP reduce_mod_p(const PolyP2& u) { return PolyP(u.base(), u.coeffs()); }

PolyP2 lift(const PolyP& u) { return PolyP2(u.base(), u.coeffs()); }

PolyP divide_by_p(const PolyP2& u) {
  std::vector<int> v = u.coeffs();
  for (int& c : v) {
    if (c % u.base().p() != 0) {
      fail(ErrorCode::kInvalidArgument, u.str() + " is not divisible by p");
    }
    c /= u.base().p();
  }
  return PolyP(u.base(), std::move(v));
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<long long> parse_list(const std::string& s) {
  std::vector<long long> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail(ErrorCode::kParse, "empty coefficient in " + s);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "bad coefficient '" + item + "'");
    }
    if (used != item.size()) fail(ErrorCode::kParse, "bad coefficient '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Caret form: terms like 3x^4, -x, 2*x^2, 7.
std::vector<long long> parse_caret(const std::string& s) {
  std::vector<long long> out;
  size_t i = 0;
  if (s.empty()) fail(ErrorCode::kParse, "empty polynomial");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(ErrorCode::kParse, "expected sign at position " + std::to_string(i) + " in " + s);
    }
    long long coef = 1;
    bool has_coef = false;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coef = std::stoll(s.substr(i, j - i));
      has_coef = true;
      i = j;
    }
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) fail(ErrorCode::kParse, "dangling '*' in " + s);
      ++i;
      if (i >= s.size() || s[i] != 'x') fail(ErrorCode::kParse, "expected x after '*' in " + s);
    }
    int exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail(ErrorCode::kParse, "missing exponent in " + s);
        exp = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coef) {
      fail(ErrorCode::kParse, "unexpected character in " + s);
    }
    if (exp > 4096) fail(ErrorCode::kParse, "exponent too large in " + s);
    if (static_cast<int>(out.size()) <= exp) out.resize(exp + 1, 0);
    out[exp] += sign * coef;
  }
  return out;
}

}  // namespace

template <Ring R>
Poly<R> parse_poly(const PrimeBase& base, const std::string& text) {
  const std::string s = strip_spaces(text);
  std::vector<long long> raw;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(ErrorCode::kParse, "unterminated list " + text);
    raw = parse_list(s);
  } else {
    raw = parse_caret(s);
  }
  const long long m = R == Ring::kZp ? base.p() : base.p2();
  std::vector<int> v(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) v[i] = static_cast<int>(((raw[i] % m) + m) % m);
  return Poly<R>(base, std::move(v));
}

template PolyP parse_poly<Ring::kZp>(const PrimeBase&, const std::string&);
template PolyP2 parse_poly<Ring::kZp2>(const PrimeBase&, const std::string&);

}  // namespace addcyc
