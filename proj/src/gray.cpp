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

#include "gray.hpp"

#include <atomic>
#include <limits>
#include <mutex>

#include "scan.hpp"

namespace addcyc {

std::string GrayWord::str() const {
  std::string s;
  s.reserve(entries.size());
  for (uint8_t e : entries) s += std::to_string(e);
  return s;
}

Vec gray_scalar(const PrimeBase& base, int theta) {
  const int p = base.p();
  if (theta < 0 || theta >= base.p2()) {
    fail(ErrorCode::kOutOfRange, "theta = " + std::to_string(theta) + " not in [0, p^2)");
  }
  const int t0 = theta / p, t1 = theta % p;
  Vec out(p);
  for (int j = 0; j < p; ++j) out[j] = static_cast<uint8_t>((t0 + t1 * j) % p);
  return out;
}

GrayWord gray_word(const MixedWord& w, const PrimeBase& base) {
  GrayWord g;
  g.entries.reserve(w.x.size() + w.y.size() * base.p());
  for (uint8_t x : w.x) g.entries.push_back(static_cast<uint8_t>(x % base.p()));
  for (uint8_t y : w.y) {
    const Vec b = gray_scalar(base, y);
    g.entries.insert(g.entries.end(), b.begin(), b.end());
  }
  return g;
}

Vec gray_row(const Row& r, int alpha, const PrimeBase& base) {
  return gray_word(unembed(r, alpha, base), base).entries;
}

int carry_scalar(const PrimeBase& base, int u, int v) {
  return base.mod_p(u) + base.mod_p(v) >= base.p() ? 1 : 0;
}

CarryTable::CarryTable(const PrimeBase& base) : p_(base.p()), t_(p_ * p_) {
  for (int a = 0; a < p_; ++a) {
    for (int b = 0; b < p_; ++b) t_[a * p_ + b] = static_cast<uint8_t>(a + b >= p_);
  }
}

MixedWord carry_vector(const MixedWord& u, const MixedWord& v, const PrimeBase& base) {
  if (u.x.size() != v.x.size() || u.y.size() != v.y.size()) {
    fail(ErrorCode::kLengthMismatch, "carry_vector: word shapes differ");
  }
  MixedWord c;
  c.x.assign(u.x.size(), 0);
  c.y.resize(u.y.size());
  for (size_t i = 0; i < u.y.size(); ++i) {
    c.y[i] = static_cast<uint8_t>(base.p() * carry_scalar(base, u.y[i], v.y[i]));
  }
  return c;
}

bool gray_identity_check(const MixedWord& u, const MixedWord& v, const PrimeBase& base) {
  if (u.x.size() != v.x.size() || u.y.size() != v.y.size()) {
    fail(ErrorCode::kLengthMismatch, "gray_identity_check: word shapes differ");
  }
  const int p = base.p();
  MixedWord s;
  s.x.resize(u.x.size());
  s.y.resize(u.y.size());
  for (size_t i = 0; i < u.x.size(); ++i) s.x[i] = static_cast<uint8_t>((u.x[i] + v.x[i]) % p);
  for (size_t i = 0; i < u.y.size(); ++i) s.y[i] = static_cast<uint8_t>((u.y[i] + v.y[i]) % base.p2());
  const Vec lhs = gray_word(s, base).entries;
  const Vec a = gray_word(u, base).entries;
  const Vec b = gray_word(v, base).entries;
  const Vec c = gray_word(carry_vector(u, v, base), base).entries;
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != (a[i] + b[i] + c[i]) % p) return false;
  }
  return true;
}

std::vector<std::vector<int>> carry_polynomial(int p) {
  const PrimeBase base(p);
  auto lagrange = [&](int k) {
    PolyP acc = PolyP::constant(base, 1);
    for (int m = 0; m < p; ++m) {
      if (m != k) acc = acc * PolyP(base, {-m, 1});
    }
    return acc;
  };
  std::vector<std::vector<int>> c(p, std::vector<int>(p, 0));
  for (int k = 1; k <= p - 1; ++k) {
    const PolyP ak = lagrange(k);
    for (int b = p - k; b <= p - 1; ++b) {
      const PolyP bb = lagrange(b);
      for (int i = 0; i <= ak.degree(); ++i) {
        for (int j = 0; j <= bb.degree(); ++j) {
          c[i][j] = (c[i][j] + ak.coeff(i) * bb.coeff(j)) % p;
        }
      }
    }
  }
  return c;
}

int carry_degree(int p) {
  const auto c = carry_polynomial(p);
  int d = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (c[i][j]) d = std::max(d, i + j);
    }
  }
  return d;
}

bool verify_carry_polynomial(const PrimeBase& base) {
  const int p = base.p();
  const auto c = carry_polynomial(p);
  for (int u = 0; u < base.p2(); ++u) {
    for (int v = 0; v < base.p2(); ++v) {
      long long s = 0;
      long long ui = 1;
      for (int i = 0; i < p; ++i, ui = ui * (u % p) % p) {
        long long vj = 1;
        for (int j = 0; j < p; ++j, vj = vj * (v % p) % p) s += c[i][j] * ui * vj;
      }
      if (s % p != carry_scalar(base, u, v)) return false;
    }
  }
  return true;
}

namespace {

struct PairHit {
  uint64_t i = std::numeric_limits<uint64_t>::max(), j = 0;
};

}  // namespace

LinearityResult gray_image_linearity(const AdditiveCode& code, ScanMode mode,
                                     const RunConfig& cfg) {
  const ResidueScanner sc(code);
  const int p = sc.p();
  LinearityResult res;
  if (mode == ScanMode::kAuto) {
    uint64_t pairs = 1;
    bool small = true;
    for (int i = 0; i < 2 * sc.delta(); ++i) {
      if (pairs > cfg.pair_budget / p) {
        small = false;
        break;
      }
      pairs *= p;
    }
    mode = small ? ScanMode::kExhaustive : ScanMode::kReduced;
  }
  res.mode = mode;

  ResidueScanner::Table t;
  std::vector<int> weight;  // digit sums, reduced mode only
  int max_weight = 0;
  if (mode == ScanMode::kExhaustive) {
    t = sc.all(cfg.residue_budget);
  } else {
    max_weight = carry_degree(p);
    const std::vector<Vec> low = sc.low_weight(max_weight);
    t = sc.of(low);
    for (const Vec& c : low) {
      int s = 0;
      for (uint8_t d : c) s += d;
      weight.push_back(s);
    }
  }
  const uint64_t n = t.size();
  std::mutex mu;
  PairHit best;
  std::atomic<uint64_t> best_i{std::numeric_limits<uint64_t>::max()};
  std::atomic<uint64_t> scanned{0};
  parallel_ranges(n, cfg.workers, [&](uint64_t lo, uint64_t hi, int) {
    uint64_t local = 0;
    for (uint64_t i = lo; i < hi && i < best_i.load(); ++i) {
      for (uint64_t j = i; j < n; ++j) {
        if (!weight.empty() && weight[i] + weight[j] > max_weight) continue;
        ++local;
        if (!sc.w().contains(sc.carry(t, i, t, j))) {
          std::lock_guard<std::mutex> lk(mu);
          if (i < best.i || (i == best.i && j < best.j)) {
            best.i = i;
            best.j = j;
            best_i.store(i);
          }
          break;
        }
      }
    }
    scanned += local;
  });
  res.pairs_scanned = scanned.load();
  if (best.i != std::numeric_limits<uint64_t>::max()) {
    res.linear = false;
    Vec ci, cj;
    if (mode == ScanMode::kExhaustive) {
      ci = sc.coords(best.i);
      cj = sc.coords(best.j);
    } else {
      const std::vector<Vec> low = sc.low_weight(max_weight);
      ci = low[best.i];
      cj = low[best.j];
    }
    const PrimeBase& base = code.base();
    res.witness_u = unembed(sc.lift(ci), code.alpha(), base);
    res.witness_v = unembed(sc.lift(cj), code.alpha(), base);
    res.witness_carry = carry_vector(*res.witness_u, *res.witness_v, base);
  }
  return res;
}

bool is_gray_image_linear(const CodeSpec& spec, const RunConfig& cfg, ScanMode mode) {
  return gray_image_linearity(AdditiveCode::of(spec), mode, cfg).linear;
}

bool linearity_sufficient_gcd(const CodeSpec& spec, int j) {
  const PrimeBase& base = spec.base();
  const PolyP gbar = reduce_mod_p(spec.g());
  if (!divides(PolyP(base, {-1, 1}), gbar)) {
    fail(ErrorCode::kHypothesisUnmet, "(x-1) does not divide g = " + spec.g().str());
  }
  PolyP fprime = reduce_mod_p(spec.f());
  if (spec.alpha() > 0) {
    const PolyP bg = (spec.b() * gbar).mod_xn(spec.alpha());
    fprime = fprime * poly_divmod(spec.a(), poly_gcd(spec.a(), bg)).quotient;
  }
  const PolyP gj = circle_product(gbar, j, spec.fact());
  return poly_gcd(fprime, gj).is_one();
}

}  // namespace addcyc
