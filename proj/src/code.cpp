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

#include "code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace addcyc {

Row embed(const MixedWord& w, const PrimeBase& base) {
  Row r(w.x.size() + w.y.size());
  for (size_t i = 0; i < w.x.size(); ++i) r[i] = static_cast<uint8_t>(w.x[i] % base.p() * base.p());
  for (size_t i = 0; i < w.y.size(); ++i) r[w.x.size() + i] = static_cast<uint8_t>(w.y[i] % base.p2());
  return r;
}

MixedWord unembed(const Row& r, int alpha, const PrimeBase& base) {
  MixedWord w;
  w.x.resize(alpha);
  for (int i = 0; i < alpha; ++i) w.x[i] = static_cast<uint8_t>(r[i] / base.p());
  w.y.assign(r.begin() + alpha, r.end());
  return w;
}

// ---------------------------------------------------------------- CodeSpec

CodeSpec CodeSpec::make(std::shared_ptr<const XnFactorization> fact, int alpha, PolyP a,
                        PolyP b, PolyP2 f, PolyP2 h, PolyP2 g) {
  if (!fact) fail(ErrorCode::kInvalidSpec, "missing factorization");
  const PrimeBase& base = fact->base();
  const int beta = fact->n();
  if (alpha < 0) fail(ErrorCode::kInvalidSpec, "alpha must be >= 0");
  if (beta < 1 || beta % base.p() == 0) fail(ErrorCode::kInvalidSpec, "gcd(beta, p) must be 1");
  CodeSpec s;
  s.fact_ = std::move(fact);
  s.alpha_ = alpha;
  if (alpha == 0) {
    if (!a.is_zero() && !a.is_one()) fail(ErrorCode::kInvalidSpec, "alpha = 0 requires a = 1");
    s.a_ = PolyP::constant(base, 1);
    s.b_ = PolyP::zero(base);
  } else {
    if (a.is_zero() || !a.is_monic()) fail(ErrorCode::kInvalidSpec, "a = " + a.str() + " is not monic");
    if (!divides(a, PolyP::xn_minus_one(base, alpha))) {
      fail(ErrorCode::kInvalidSpec, "a = " + a.str() + " does not divide x^" + std::to_string(alpha) + "-1");
    }
    s.a_ = a;
    s.b_ = poly_divmod(b.mod_xn(alpha), a).remainder;
  }
  for (const PolyP2* q : {&f, &h, &g}) {
    if (q->is_zero() || !q->is_monic()) fail(ErrorCode::kInvalidSpec, q->str() + " is not monic");
  }
  const PolyP2 residual = f * h * g - PolyP2::xn_minus_one(base, beta);
  if (!residual.is_zero()) {
    fail(ErrorCode::kInvalidSpec, "f*h*g != x^" + std::to_string(beta) +
                                      "-1; residual f*h*g-(x^" + std::to_string(beta) +
                                      "-1) = " + residual.str());
  }
  s.f_ = std::move(f);
  s.h_ = std::move(h);
  s.g_ = std::move(g);
  return s;
}

CodeSpec CodeSpec::make(const PrimeBase& base, int alpha, int beta, PolyP a, PolyP b,
                        PolyP2 f, PolyP2 h, PolyP2 g) {
  if (beta < 1 || beta % base.p() == 0) fail(ErrorCode::kInvalidSpec, "gcd(beta, p) must be 1");
  auto fact = std::make_shared<const XnFactorization>(factor_xn_minus_1(base, beta));
  return make(std::move(fact), alpha, std::move(a), std::move(b), std::move(f), std::move(h),
              std::move(g));
}

PolyP2 CodeSpec::y_generator() const {
  return (f_ * h_ + f_.scaled(p())).mod_xn(beta());
}

std::vector<GenPair> CodeSpec::generators() const {
  std::vector<GenPair> out;
  if (alpha_ > 0) out.push_back({a_, PolyP2::zero(base())});
  out.push_back({b_, y_generator()});
  return out;
}

std::string CodeSpec::key() const {
  std::ostringstream os;
  os << p() << '|' << alpha_ << '|' << beta() << '|' << a_.str() << '|' << b_.str() << '|'
     << f_.str() << '|' << h_.str() << '|' << g_.str();
  return os.str();
}

std::vector<Row> shift_rows(const PrimeBase& base, int alpha, int beta,
                            const std::vector<GenPair>& gens) {
  std::vector<Row> rows;
  for (const GenPair& gp : gens) {
    const PolyP x = alpha > 0 ? gp.x.mod_xn(alpha) : PolyP::zero(base);
    const PolyP2 y = gp.y.mod_xn(beta);
    const int lx = x.is_zero() ? 1 : alpha;
    const int ly = y.is_zero() ? 1 : beta;
    const int len = static_cast<int>(std::lcm(lx, ly));
    if (x.is_zero() && y.is_zero()) continue;
    for (int i = 0; i < len; ++i) {
      Row r(alpha + beta, 0);
      for (int j = 0; j <= x.degree(); ++j) {
        r[(i + j) % alpha] = static_cast<uint8_t>(x.coeffs()[j] * base.p());
      }
      for (int j = 0; j <= y.degree(); ++j) {
        r[alpha + (i + j) % beta] = static_cast<uint8_t>(y.coeffs()[j]);
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

// ----------------------------------------------------------- AdditiveCode

namespace {

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](uint8_t v) { return v == 0; });
}

void axpy(Row& dst, int k, const Row& src, int m) {
  if (k == 0) return;
  for (size_t i = 0; i < dst.size(); ++i) {
    if (src[i]) dst[i] = static_cast<uint8_t>((dst[i] + k * src[i]) % m);
  }
}

}  // namespace

AdditiveCode::AdditiveCode(const PrimeBase& base, int alpha, int beta,
                           const std::vector<Row>& gens)
    : base_(base), alpha_(alpha), beta_(beta), u_(base.p(), alpha + beta) {
  const int p = base.p(), m = base.p2();
  std::vector<Row> pool;
  for (const Row& r : gens) {
    if (static_cast<int>(r.size()) != alpha + beta) {
      fail(ErrorCode::kLengthMismatch, "generator row length");
    }
    if (!is_zero_row(r)) pool.push_back(r);
  }
  for (int c = alpha; c < alpha + beta && !pool.empty(); ++c) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](const Row& r) { return r[c] % p != 0; });
    if (it == pool.end()) continue;
    Row r = std::move(*it);
    pool.erase(it);
    const int inv = base.inv_p2(r[c]);
    for (auto& e : r) e = static_cast<uint8_t>(e * inv % m);
    for (Row& s : pool) axpy(s, m - s[c], r, m);
    for (Row& v : v_) axpy(v, m - v[c], r, m);
    pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero_row), pool.end());
    v_.push_back(std::move(r));
    vpiv_.push_back(c);
  }
  for (const Row& s : pool) {
    Vec z(alpha + beta);
    for (int i = 0; i < alpha + beta; ++i) {
      if (s[i] % p != 0) fail(ErrorCode::kInvalidArgument, "two-tier elimination left a unit");
      z[i] = static_cast<uint8_t>(s[i] / p);
    }
    u_.add(std::move(z));
  }
}

AdditiveCode AdditiveCode::of(const CodeSpec& spec) {
  return AdditiveCode(spec.base(), spec.alpha(), spec.beta(),
                      shift_rows(spec.base(), spec.alpha(), spec.beta(), spec.generators()));
}

int AdditiveCode::kappa() const {
  int k = 0;
  for (int c : u_.pivots()) k += c < alpha_;
  return k;
}

bool AdditiveCode::contains(const Row& w0) const {
  if (static_cast<int>(w0.size()) != length()) fail(ErrorCode::kLengthMismatch, "word length");
  const int p = base_.p(), m = base_.p2();
  Row w = w0;
  for (size_t j = 0; j < v_.size(); ++j) {
    const int k = w[vpiv_[j]];
    if (k) axpy(w, m - k, v_[j], m);
  }
  Vec z(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] % p) return false;
    z[i] = static_cast<uint8_t>(w[i] / p);
  }
  return u_.contains(std::move(z));
}

bool AdditiveCode::contains(const MixedWord& w) const {
  if (static_cast<int>(w.x.size()) != alpha_ || static_cast<int>(w.y.size()) != beta_) {
    fail(ErrorCode::kLengthMismatch, "word shape does not match the code");
  }
  return contains(embed(w, base_));
}

bool AdditiveCode::contains_code(const AdditiveCode& o) const {
  for (const Row& r : o.generators()) {
    if (!contains(r)) return false;
  }
  return true;
}

bool AdditiveCode::operator==(const AdditiveCode& o) const {
  return alpha_ == o.alpha_ && beta_ == o.beta_ && log_size() == o.log_size() &&
         contains_code(o);
}

std::vector<Row> AdditiveCode::generators() const {
  std::vector<Row> out = v_;
  for (const Vec& z : u_.rows()) {
    Row r(z.size());
    for (size_t i = 0; i < z.size(); ++i) r[i] = static_cast<uint8_t>(z[i] * base_.p());
    out.push_back(std::move(r));
  }
  return out;
}

AdditiveCode AdditiveCode::x_only_subcode() const {
  const int p = base_.p();
  std::vector<Vec> ys;
  for (const Vec& z : u_.rows()) ys.emplace_back(z.begin() + alpha_, z.end());
  std::vector<Row> rows;
  for (const Vec& k : left_kernel(p, ys, beta_)) {
    Row r(length(), 0);
    for (size_t i = 0; i < k.size(); ++i) {
      for (int c = 0; c < length(); ++c) {
        r[c] = static_cast<uint8_t>((r[c] + k[i] * u_.rows()[i][c] * p) % base_.p2());
      }
    }
    rows.push_back(std::move(r));
  }
  return AdditiveCode(base_, alpha_, beta_, rows);
}

AdditiveCode AdditiveCode::y_only_subcode() const {
  const int p = base_.p(), m = base_.p2();
  std::vector<Vec> xs;
  for (const Row& v : v_) {
    Vec x(alpha_);
    for (int i = 0; i < alpha_; ++i) x[i] = static_cast<uint8_t>(v[i] / p);
    xs.push_back(std::move(x));
  }
  for (const Vec& z : u_.rows()) xs.emplace_back(z.begin(), z.begin() + alpha_);
  std::vector<Row> rows;
  for (const Vec& k : left_kernel(p, xs, alpha_)) {
    Row r(length(), 0);
    for (size_t j = 0; j < v_.size(); ++j) axpy(r, k[j], v_[j], m);
    for (size_t i = 0; i < u_.rows().size(); ++i) {
      const Vec& z = u_.rows()[i];
      const int kk = k[v_.size() + i];
      if (!kk) continue;
      for (int c = 0; c < length(); ++c) r[c] = static_cast<uint8_t>((r[c] + kk * z[c] * p) % m);
    }
    rows.push_back(std::move(r));
  }
  for (const Row& v : v_) {
    Row r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = static_cast<uint8_t>(v[i] * p % m);
    rows.push_back(std::move(r));
  }
  return AdditiveCode(base_, alpha_, beta_, rows);
}

CodeType AdditiveCode::type() const {
  CodeType t;
  t.alpha = alpha_;
  t.beta = beta_;
  t.gamma = gamma();
  t.delta = delta();
  t.kappa = kappa();
  t.kappa1 = x_only_subcode().gamma();
  t.kappa2 = t.kappa - t.kappa1;
  t.delta2 = y_only_subcode().delta();
  t.delta1 = t.delta - t.delta2;
  return t;
}

Row cyclic_shift(const Row& w, int alpha) {
  Row r(w.size());
  const int beta = static_cast<int>(w.size()) - alpha;
  for (int i = 0; i < alpha; ++i) r[(i + 1) % alpha] = w[i];
  for (int i = 0; i < beta; ++i) r[alpha + (i + 1) % beta] = w[alpha + i];
  return r;
}

MixedWord cyclic_shift(const MixedWord& w) {
  MixedWord r;
  r.x.resize(w.x.size());
  r.y.resize(w.y.size());
  for (size_t i = 0; i < w.x.size(); ++i) r.x[(i + 1) % w.x.size()] = w.x[i];
  for (size_t i = 0; i < w.y.size(); ++i) r.y[(i + 1) % w.y.size()] = w.y[i];
  return r;
}

bool AdditiveCode::is_shift_invariant() const {
  for (const Row& r : generators()) {
    if (!contains(cyclic_shift(r, alpha_))) return false;
  }
  return true;
}

std::vector<Vec> AdditiveCode::y_residue_basis() const {
  std::vector<Vec> out;
  for (const Row& v : v_) {
    Vec y(beta_);
    for (int i = 0; i < beta_; ++i) y[i] = static_cast<uint8_t>(v[alpha_ + i] % base_.p());
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<Vec> AdditiveCode::w_basis() const {
  const int p = base_.p();
  ZpBasis w(p, beta_);
  for (const Vec& y : y_residue_basis()) w.add(y);
  std::vector<Vec> xs;
  for (const Vec& z : u_.rows()) xs.emplace_back(z.begin(), z.begin() + alpha_);
  for (const Vec& k : left_kernel(p, xs, alpha_)) {
    Vec y(beta_, 0);
    for (size_t i = 0; i < k.size(); ++i) {
      if (!k[i]) continue;
      for (int c = 0; c < beta_; ++c) {
        y[c] = static_cast<uint8_t>((y[c] + k[i] * u_.rows()[i][alpha_ + c]) % p);
      }
    }
    w.add(std::move(y));
  }
  return w.rows();
}

int AdditiveCode::x_dimension() const {
  ZpBasis b(base_.p(), std::max(alpha_, 1));
  if (alpha_ == 0) return 0;
  for (const Row& v : v_) {
    Vec x(alpha_);
    for (int i = 0; i < alpha_; ++i) x[i] = static_cast<uint8_t>(v[i] / base_.p());
    b.add(std::move(x));
  }
  for (const Vec& z : u_.rows()) b.add(Vec(z.begin(), z.begin() + alpha_));
  return b.rank();
}

AdditiveCode AdditiveCode::y_projection() const {
  std::vector<Row> rows;
  for (const Row& r : generators()) rows.emplace_back(r.begin() + alpha_, r.end());
  return AdditiveCode(base_, 0, beta_, rows);
}

AdditiveCode AdditiveCode::extended(const std::vector<Row>& extra) const {
  std::vector<Row> rows = generators();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return AdditiveCode(base_, alpha_, beta_, rows);
}

void AdditiveCode::enumerate(uint64_t budget, const std::function<void(const Row&)>& fn) const {
  const int p = base_.p(), m = base_.p2();
  uint64_t count = 1;
  for (int i = 0; i < log_size(); ++i) {
    if (count > budget / p) {
      fail(ErrorCode::kBudgetExceeded, "|C| = " + std::to_string(p) + "^" +
                                           std::to_string(log_size()) + " exceeds word budget " +
                                           std::to_string(budget));
    }
    count *= p;
  }
  const std::vector<Row> gens = generators();
  const int levels = static_cast<int>(gens.size());
  std::vector<int> radix(levels, p);
  for (int l = 0; l < delta(); ++l) radix[l] = m;
  // Odometer; acc[l] is the partial sum over levels < l.
  std::vector<Row> acc(levels + 1, Row(length(), 0));
  std::vector<int> digit(levels, 0);
  for (;;) {
    fn(acc[levels]);
    int l = levels - 1;
    while (l >= 0 && digit[l] == radix[l] - 1) {
      digit[l] = 0;
      --l;
    }
    if (l < 0) break;
    ++digit[l];
    acc[l + 1] = acc[l];
    axpy(acc[l + 1], digit[l], gens[l], m);
    for (int k = l + 1; k < levels; ++k) acc[k + 1] = acc[k];
  }
}

// ----------------------------------------------------------------- spec ops

GenPair star_multiply(const PolyP2& scalar, const GenPair& word, int alpha, int beta) {
  if ((alpha == 0 && !word.x.is_zero()) || (alpha > 0 && word.x.degree() >= alpha) ||
      word.y.degree() >= beta) {
    fail(ErrorCode::kLengthMismatch, "word components are not reduced");
  }
  GenPair out;
  out.x = alpha > 0 ? (reduce_mod_p(scalar) * word.x).mod_xn(alpha) : PolyP::zero(word.y.base());
  out.y = (scalar * word.y).mod_xn(beta);
  return out;
}

TypeReport compute_type(const CodeSpec& spec) {
  TypeReport rep;
  const AdditiveCode code = AdditiveCode::of(spec);
  rep.matrix = code.type();
  CodeType& t = rep.formula;
  t.alpha = spec.alpha();
  t.beta = spec.beta();
  const int deg_a = spec.alpha() > 0 ? spec.a().degree() : 0;
  t.gamma = spec.alpha() - deg_a + spec.h().degree();
  t.delta = spec.g().degree();
  if (spec.alpha() > 0) {
    const PolyP bg = (spec.b() * reduce_mod_p(spec.g())).mod_xn(spec.alpha());
    t.kappa = spec.alpha() - poly_gcd(spec.a(), bg).degree();
  }
  t.kappa1 = spec.alpha() - deg_a;
  t.kappa2 = t.kappa - t.kappa1;
  t.delta1 = rep.matrix.delta1;
  t.delta2 = rep.matrix.delta2;
  return rep;
}

StdGenMatrix standard_form(const AdditiveCode& code) {
  const PrimeBase& base = code.base();
  const int p = base.p(), m = base.p2();
  const int alpha = code.alpha(), beta = code.beta();
  StdGenMatrix s;
  s.alpha = alpha;
  s.beta = beta;
  const ZpBasis& u = code.u_basis();
  std::vector<const Vec*> kap, mid;
  std::vector<int> kap_piv, mid_piv;
  for (size_t i = 0; i < u.rows().size(); ++i) {
    if (u.pivots()[i] < alpha) {
      kap.push_back(&u.rows()[i]);
      kap_piv.push_back(u.pivots()[i]);
    } else {
      mid.push_back(&u.rows()[i]);
      mid_piv.push_back(u.pivots()[i] - alpha);
    }
  }
  s.kappa = static_cast<int>(kap.size());
  s.gamma_minus_kappa = static_cast<int>(mid.size());
  s.delta = code.delta();
  auto as_word = [&](const Vec& z) {
    MixedWord w;
    w.x.assign(z.begin(), z.begin() + alpha);
    w.y.resize(beta);
    for (int i = 0; i < beta; ++i) w.y[i] = static_cast<uint8_t>(z[alpha + i] * p);
    return w;
  };
  for (const Vec* z : kap) s.rows.push_back(as_word(*z));
  for (const Vec* z : mid) s.rows.push_back(as_word(*z));
  std::vector<int> vpiv;
  for (size_t j = 0; j < code.v_rows().size(); ++j) {
    Row v = code.v_rows()[j];
    for (size_t i = 0; i < kap.size(); ++i) {
      const int e = v[kap_piv[i]] / p;
      if (!e) continue;
      for (int c = 0; c < alpha + beta; ++c) {
        v[c] = static_cast<uint8_t>((v[c] + (m - e) * (*kap[i])[c] * p) % m);
      }
    }
    for (size_t i = 0; i < mid.size(); ++i) {
      const int q = v[alpha + mid_piv[i]] / p;
      if (!q) continue;
      for (int c = 0; c < alpha + beta; ++c) {
        v[c] = static_cast<uint8_t>((v[c] + (m - q) * (*mid[i])[c] * p) % m);
      }
    }
    s.rows.push_back(unembed(v, alpha, base));
    vpiv.push_back(code.v_pivots()[j] - alpha);
  }
  std::vector<bool> xused(alpha, false), yused(beta, false);
  for (int c : kap_piv) {
    s.x_order.push_back(c);
    xused[c] = true;
  }
  std::vector<int> xrest, yrest;
  for (int c = 0; c < alpha; ++c) {
    if (!xused[c]) xrest.push_back(c);
  }
  for (int c : mid_piv) yused[c] = true;
  for (int c : vpiv) yused[c] = true;
  for (int c = 0; c < beta; ++c) {
    if (!yused[c]) yrest.push_back(c);
  }
  s.x_order.insert(s.x_order.end(), xrest.begin(), xrest.end());
  s.y_order = yrest;
  s.y_order.insert(s.y_order.end(), mid_piv.begin(), mid_piv.end());
  s.y_order.insert(s.y_order.end(), vpiv.begin(), vpiv.end());
  auto block = [&](int r0, int r1, bool xside, const std::vector<int>& cols, int div) {
    std::vector<Vec> out;
    for (int r = r0; r < r1; ++r) {
      Vec row;
      for (int c : cols) row.push_back(static_cast<uint8_t>((xside ? s.rows[r].x[c] : s.rows[r].y[c]) / div));
      out.push_back(std::move(row));
    }
    return out;
  };
  const int k = s.kappa, g = k + s.gamma_minus_kappa, d = g + s.delta;
  s.t_prime = block(0, k, true, xrest, 1);
  s.t2 = block(0, k, false, yrest, p);
  s.t1 = block(k, g, false, yrest, p);
  s.s_prime = block(g, d, true, xrest, 1);
  s.s = block(g, d, false, yrest, 1);
  s.r = block(g, d, false, mid_piv, 1);
  return s;
}

StdGenMatrix standard_form(const CodeSpec& spec) {
  return standard_form(AdditiveCode::of(spec));
}

bool contains(const CodeSpec& spec, const MixedWord& w) {
  return AdditiveCode::of(spec).contains(w);
}

bool contains_by_enumeration(const AdditiveCode& code, const MixedWord& w, uint64_t budget) {
  if (static_cast<int>(w.x.size()) != code.alpha() || static_cast<int>(w.y.size()) != code.beta()) {
    fail(ErrorCode::kLengthMismatch, "word shape does not match the code");
  }
  std::set<Row> all;
  code.enumerate(budget, [&](const Row& r) { all.insert(r); });
  return all.count(embed(w, code.base())) > 0;
}

std::vector<MixedWord> enumerate_words(const CodeSpec& spec, uint64_t budget) {
  const AdditiveCode code = AdditiveCode::of(spec);
  std::vector<MixedWord> out;
  code.enumerate(budget, [&](const Row& r) { out.push_back(unembed(r, spec.alpha(), spec.base())); });
  return out;
}

std::vector<MixedWord> enumerate_residues(const CodeSpec& spec, uint64_t budget) {
  const AdditiveCode code = AdditiveCode::of(spec);
  const int p = spec.p(), alpha = spec.alpha(), beta = spec.beta();
  ZpBasis img(p, alpha + beta);
  for (const Row& v : code.v_rows()) {
    Vec r(alpha + beta);
    for (int i = 0; i < alpha; ++i) r[i] = static_cast<uint8_t>(v[i] / p);
    for (int i = 0; i < beta; ++i) r[alpha + i] = static_cast<uint8_t>(v[alpha + i] % p);
    img.add(std::move(r));
  }
  for (const Vec& z : code.u_basis().rows()) {
    Vec r(alpha + beta, 0);
    for (int i = 0; i < alpha; ++i) r[i] = z[i];
    img.add(std::move(r));
  }
  uint64_t count = 1;
  for (int i = 0; i < img.rank(); ++i) {
    if (count > budget / p) fail(ErrorCode::kBudgetExceeded, "residue count exceeds budget");
    count *= p;
  }
  std::vector<MixedWord> out;
  out.reserve(count);
  std::vector<int> digit(img.rank(), 0);
  for (uint64_t idx = 0; idx < count; ++idx) {
    uint64_t t = idx;
    Vec w(alpha + beta, 0);
    for (int k = 0; k < img.rank(); ++k) {
      const int d = static_cast<int>(t % p);
      t /= p;
      if (!d) continue;
      for (int c = 0; c < alpha + beta; ++c) {
        w[c] = static_cast<uint8_t>((w[c] + d * img.rows()[k][c]) % p);
      }
    }
    MixedWord mw;
    mw.x.assign(w.begin(), w.begin() + alpha);
    mw.y.assign(w.begin() + alpha, w.end());
    out.push_back(std::move(mw));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PolyP x_reduce(const CodeSpec& spec, const PolyP& u) {
  if (spec.alpha() == 0) return PolyP::zero(spec.base());
  return u.mod_xn(spec.alpha());
}

void verify_in_code(const AdditiveCode& code, const std::vector<GenPair>& gens, int alpha,
                    int beta, const char* what) {
  for (const Row& r : shift_rows(code.base(), alpha, beta, gens)) {
    if (!code.contains(r)) fail(ErrorCode::kInvalidArgument, std::string(what) + ": generator not in C");
  }
}

}  // namespace

std::vector<GenPair> subcode_order_p(const CodeSpec& spec) {
  const int p = spec.p(), beta = spec.beta();
  std::vector<GenPair> out;
  out.push_back({x_reduce(spec, spec.a()), PolyP2::zero(spec.base())});
  out.push_back({x_reduce(spec, spec.b() * reduce_mod_p(spec.g())),
                 (spec.f() * spec.g()).scaled(p).mod_xn(beta)});
  out.push_back({PolyP::zero(spec.base()), (spec.f() * spec.h()).scaled(p).mod_xn(beta)});
  const AdditiveCode code = AdditiveCode::of(spec);
  verify_in_code(code, out, spec.alpha(), beta, "subcode_order_p");
  for (const GenPair& gp : out) {
    if (!gp.y.scaled(p).is_zero()) fail(ErrorCode::kInvalidArgument, "C_p generator of order p^2");
  }
  return out;
}

BezoutPair bezout_pair(const CodeSpec& spec) {
  const PolyP hb = reduce_mod_p(spec.h()), gb = reduce_mod_p(spec.g());
  const XGcd x = poly_xgcd(hb, gb);
  if (!x.g.is_one()) fail(ErrorCode::kNotCoprime, "h and g are not coprime mod p");
  const PolyP2 l0 = lift(x.s), m0 = lift(x.t);
  const PolyP e = divide_by_p(l0 * spec.h() + m0 * spec.g() - PolyP2::constant(spec.base(), 1));
  BezoutPair bp;
  bp.lambda = l0 - lift(e * x.s).scaled(spec.p());
  bp.mu = m0 - lift(e * x.t).scaled(spec.p());
  if (!(bp.lambda * spec.h() + bp.mu * spec.g()).is_one()) {
    fail(ErrorCode::kNotCoprime, "Bezout lift failed");
  }
  return bp;
}

ThreeGeneratorForm three_generator_form(const CodeSpec& spec) {
  ThreeGeneratorForm t;
  t.bezout = bezout_pair(spec);
  const PolyP mbg = x_reduce(spec, reduce_mod_p(t.bezout.mu) * spec.b() * reduce_mod_p(spec.g()));
  t.b_prime = x_reduce(spec, spec.b() - mbg);
  t.gens.push_back({x_reduce(spec, spec.a()), PolyP2::zero(spec.base())});
  t.gens.push_back({t.b_prime, (spec.f() * spec.h()).mod_xn(spec.beta())});
  t.gens.push_back({mbg, spec.f().scaled(spec.p()).mod_xn(spec.beta())});
  const AdditiveCode c = AdditiveCode::of(spec);
  const AdditiveCode d(spec.base(), spec.alpha(), spec.beta(),
                       shift_rows(spec.base(), spec.alpha(), spec.beta(), t.gens));
  if (!(c == d)) fail(ErrorCode::kInvalidArgument, "three-generator form does not generate C");
  return t;
}

CodeSpec subcode_for_divisor(const CodeSpec& spec, const PolyP2& k) {
  uint64_t km = 0;
  try {
    km = spec.fact().mask_of(k);
  } catch (const Error&) {
    fail(ErrorCode::kNotADivisorOfG, k.str() + " does not divide g = " + spec.g().str());
  }
  const uint64_t gm = spec.fact().mask_of(spec.g());
  if ((km & ~gm) != 0) fail(ErrorCode::kNotADivisorOfG, k.str() + " does not divide g = " + spec.g().str());
  PolyP bk = PolyP::zero(spec.base());
  if (spec.alpha() > 0) {
    const PolyP kb = reduce_mod_p(k);
    const PolyP mu = reduce_mod_p(bezout_pair(spec).mu);
    const PolyP one = PolyP::constant(spec.base(), 1);
    bk = poly_divmod(kb * spec.b() + (one - kb) * mu * spec.b() * reduce_mod_p(spec.g()), spec.a())
             .remainder;
  }
  CodeSpec d = CodeSpec::make(spec.fact_ptr(), spec.alpha(), spec.a(), bk, spec.f(), spec.h() * k,
                              poly_divmod_monic(spec.g(), k).quotient);
  verify_in_code(AdditiveCode::of(spec), d.generators(), spec.alpha(), spec.beta(), "subcode_for_divisor");
  return d;
}

CodeSpec intersect_cyclic_zp2(const CodeSpec& c1, const CodeSpec& c2) {
  if (c1.beta() != c2.beta() || c1.p() != c2.p() || c1.f() != c2.f()) {
    fail(ErrorCode::kIncompatibleF, "intersection needs a common f and length");
  }
  const XnFactorization& fact = c1.fact();
  return CodeSpec::make(c1.fact_ptr(), 0, PolyP::constant(c1.base(), 1), PolyP::zero(c1.base()),
                        c1.f(), divisor_lcm(c1.h(), c2.h(), fact), divisor_gcd(c1.g(), c2.g(), fact));
}

CodeSpec intersect_subcodes(const CodeSpec& spec, const PolyP2& k1, const PolyP2& k2) {
  const uint64_t gm = spec.fact().mask_of(spec.g());
  for (const PolyP2* k : {&k1, &k2}) {
    uint64_t km = 0;
    try {
      km = spec.fact().mask_of(*k);
    } catch (const Error&) {
      fail(ErrorCode::kNotADivisorOfG, k->str() + " does not divide g");
    }
    if (km & ~gm) fail(ErrorCode::kNotADivisorOfG, k->str() + " does not divide g");
  }
  return subcode_for_divisor(spec, divisor_lcm(k1, k2, spec.fact()));
}

namespace {
PolyP x_only_candidate(const CodeSpec& spec) {
  const PolyP hg = reduce_mod_p(spec.h()) * reduce_mod_p(spec.g());
  return (spec.b() * hg).mod_xn(spec.alpha());
}
}  // namespace

bool is_standard_spec(const CodeSpec& spec) {
  if (spec.alpha() == 0) return true;
  return divides(spec.a(), x_only_candidate(spec));
}

CodeSpec standard_spec(const CodeSpec& spec) {
  if (is_standard_spec(spec)) return spec;
  const PolyP a = poly_gcd(spec.a(), x_only_candidate(spec));
  const PolyP b = poly_divmod(spec.b(), a).remainder;
  return CodeSpec::make(spec.fact_ptr(), spec.alpha(), a, b, spec.f(), spec.h(), spec.g());
}

PolyP project_x(const CodeSpec& spec) {
  if (spec.alpha() == 0) return PolyP::constant(spec.base(), 1);
  return poly_gcd(spec.a(), spec.b());
}

CodeSpec project_y(const CodeSpec& spec) {
  return CodeSpec::make(spec.fact_ptr(), 0, PolyP::constant(spec.base(), 1), PolyP::zero(spec.base()),
                        spec.f(), spec.h(), spec.g());
}

Separability is_separable(const CodeSpec& spec) {
  const AdditiveCode code = AdditiveCode::of(spec);
  const CodeType t = code.type();
  Separability s;
  s.by_size = code.log_size() == code.x_dimension() + code.y_projection().log_size();
  s.by_type = t.kappa2 == 0 && t.delta1 == 0;
  return s;
}

std::vector<PolyP> divisors_of_xn_minus_1(const PrimeBase& base, int n) {
  if (n < 1) fail(ErrorCode::kOutOfRange, "length must be positive");
  // x^n - 1 = (x^m - 1)^(p^e) with gcd(m, p) = 1.
  const int p = base.p();
  int m = n, power = 1;
  while (m % p == 0) {
    m /= p;
    power *= p;
  }
  std::vector<PolyP> irreducible;
  const XnFactorization fact = factor_xn_minus_1(base, m);
  for (int i = 0; i < fact.size(); ++i) irreducible.push_back(fact.product_mod_p(1ULL << i));
  std::vector<PolyP> out{PolyP::constant(base, 1)};
  for (const PolyP& f : irreducible) {
    std::vector<PolyP> next;
    for (const PolyP& d : out) {
      PolyP q = d;
      for (int e = 0; e <= power; ++e) {
        next.push_back(q);
        q = q * f;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CodeSpec> enumerate_specs(std::shared_ptr<const XnFactorization> fact, int alpha,
                                      uint64_t b_cap, bool* partial) {
  const PrimeBase& base = fact->base();
  const int p = base.p();
  if (partial) *partial = false;
  std::vector<PolyP> as;
  if (alpha == 0) {
    as.push_back(PolyP::constant(base, 1));
  } else {
    as = divisors_of_xn_minus_1(base, alpha);
  }
  std::vector<CodeSpec> out;
  const int nf = fact->size();
  uint64_t triples = 1;
  for (int i = 0; i < nf; ++i) triples *= 3;
  for (const PolyP& a : as) {
    const int da = alpha == 0 ? 0 : a.degree();
    std::vector<PolyP> bs;
    uint64_t nb = 1;
    for (int i = 0; i < da && nb <= b_cap; ++i) nb *= p;
    if (nb <= b_cap) {
      for (uint64_t idx = 0; idx < nb; ++idx) {
        std::vector<int> c(da);
        uint64_t t = idx;
        for (int i = 0; i < da; ++i) {
          c[i] = static_cast<int>(t % p);
          t /= p;
        }
        bs.emplace_back(base, c);
      }
    } else {
      if (partial) *partial = true;
      bs.push_back(PolyP::zero(base));
      for (int i = 0; i < da; ++i) {
        for (int c = 1; c < p; ++c) bs.push_back(PolyP::monomial(base, i, c));
      }
    }
    std::sort(bs.begin(), bs.end());
    for (uint64_t tr = 0; tr < triples; ++tr) {
      uint64_t fm = 0, hm = 0, gm = 0, t = tr;
      for (int i = 0; i < nf; ++i) {
        const int role = static_cast<int>(t % 3);
        t /= 3;
        (role == 0 ? fm : role == 1 ? hm : gm) |= 1ULL << i;
      }
      for (const PolyP& b : bs) {
        CodeSpec s = CodeSpec::make(fact, alpha, a, b, fact->product(fm), fact->product(hm),
                                    fact->product(gm));
        if (is_standard_spec(s)) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace addcyc
