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

#include "scan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace addcyc {

MaskSpan::MaskSpan(int p, int n) : p_(p), n_(n), basis_(p, n) {
  if (n > 64) fail(ErrorCode::kOutOfRange, "carry masks need beta <= 64");
  rebuild();
}

void MaskSpan::rebuild() {
  const std::vector<Vec> h = orthogonal_complement(p_, basis_.rows(), n_);
  nchecks_ = static_cast<int>(h.size());
  checks_.assign(static_cast<size_t>(nchecks_) * (p_ - 1), 0);
  for (int r = 0; r < nchecks_; ++r) {
    for (int i = 0; i < n_; ++i) {
      if (h[r][i]) checks_[r * (p_ - 1) + h[r][i] - 1] |= 1ULL << i;
    }
  }
}

bool MaskSpan::contains(uint64_t mask) const {
  const uint64_t* c = checks_.data();
  for (int r = 0; r < nchecks_; ++r, c += p_ - 1) {
    int s = 0;
    for (int t = 1; t < p_; ++t) s += t * std::popcount(c[t - 1] & mask);
    if (s % p_) return false;
  }
  return true;
}

bool MaskSpan::add(uint64_t mask) {
  if (contains(mask)) return false;
  Vec v(n_, 0);
  for (int i = 0; i < n_; ++i) v[i] = (mask >> i) & 1;
  basis_.add(std::move(v));
  rebuild();
  return true;
}

void MaskSpan::add_vec(const Vec& v) {
  if (basis_.add(v)) rebuild();
}

ResidueScanner::ResidueScanner(const AdditiveCode& code)
    : code_(code),
      p_(code.base().p()),
      beta_(code.beta()),
      delta_(code.delta()),
      basis_(code.y_residue_basis()),
      w_(code.base().p(), code.beta()) {
  for (const Vec& v : code.w_basis()) w_.add_vec(v);
}

uint64_t ResidueScanner::count(uint64_t cap) const {
  uint64_t n = 1;
  for (int i = 0; i < delta_; ++i) {
    if (n > cap / p_) {
      fail(ErrorCode::kBudgetExceeded, std::to_string(p_) + "^" + std::to_string(delta_) +
                                           " residues exceed budget " + std::to_string(cap));
    }
    n *= p_;
  }
  return n;
}

namespace {

void push_masks(ResidueScanner::Table& t, const Vec& vals, int p) {
  const size_t base = t.eq.size();
  t.eq.resize(base + p - 1, 0);
  t.ge.resize(base + p - 1, 0);
  for (size_t i = 0; i < vals.size(); ++i) {
    if (vals[i]) t.eq[base + vals[i] - 1] |= 1ULL << i;
  }
  uint64_t acc = 0;
  for (int s = p - 1; s >= 1; --s) {
    acc |= t.eq[base + s - 1];
    t.ge[base + s - 1] = acc;
  }
}

}  // namespace

ResidueScanner::Table ResidueScanner::all(uint64_t budget) const {
  const uint64_t n = count(budget);
  Table t;
  t.stride = p_ - 1;
  t.eq.reserve(n * t.stride);
  t.ge.reserve(n * t.stride);
  Vec vals(beta_, 0);
  std::vector<int> digit(delta_, 0);
  for (uint64_t i = 0;; ++i) {
    push_masks(t, vals, p_);
    if (i + 1 == n) break;
    // Odometer step: digits that wrap add one more copy of their row.
    int j = 0;
    for (;; ++j) {
      const Vec& b = basis_[j];
      for (int c = 0; c < beta_; ++c) vals[c] = static_cast<uint8_t>((vals[c] + b[c]) % p_);
      if (digit[j] < p_ - 1) {
        ++digit[j];
        break;
      }
      digit[j] = 0;
    }
  }
  return t;
}

ResidueScanner::Table ResidueScanner::of(const std::vector<Vec>& coords) const {
  Table t;
  t.stride = p_ - 1;
  for (const Vec& c : coords) {
    Vec vals(beta_, 0);
    for (int j = 0; j < delta_; ++j) {
      if (!c[j]) continue;
      for (int k = 0; k < beta_; ++k) vals[k] = static_cast<uint8_t>((vals[k] + c[j] * basis_[j][k]) % p_);
    }
    push_masks(t, vals, p_);
  }
  return t;
}

std::vector<Vec> ResidueScanner::low_weight(int w) const {
  std::vector<Vec> out;
  Vec cur(delta_, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == delta_) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= std::min(left, p_ - 1); ++d) {
      cur[j] = static_cast<uint8_t>(d);
      rec(j + 1, left - d);
    }
    cur[j] = 0;
  };
  rec(0, w);
  auto index = [&](const Vec& c) {
    uint64_t idx = 0;
    for (int j = delta_ - 1; j >= 0; --j) idx = idx * p_ + c[j];
    return idx;
  };
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return index(a) < index(b); });
  return out;
}

Vec ResidueScanner::coords(uint64_t idx) const {
  Vec c(delta_);
  for (int j = 0; j < delta_; ++j) {
    c[j] = static_cast<uint8_t>(idx % p_);
    idx /= p_;
  }
  return c;
}

Row ResidueScanner::lift(const Vec& c) const {
  const int m = p_ * p_;
  Row r(code_.length(), 0);
  for (int j = 0; j < delta_; ++j) {
    if (!c[j]) continue;
    const Row& v = code_.v_rows()[j];
    for (size_t k = 0; k < r.size(); ++k) r[k] = static_cast<uint8_t>((r[k] + c[j] * v[k]) % m);
  }
  return r;
}

Row ResidueScanner::carry_row(uint64_t mask) const {
  Row r(code_.length(), 0);
  for (int i = 0; i < beta_; ++i) {
    if ((mask >> i) & 1) r[code_.alpha() + i] = static_cast<uint8_t>(p_);
  }
  return r;
}

void parallel_ranges(uint64_t n, int workers,
                     const std::function<void(uint64_t, uint64_t, int)>& fn) {
  if (workers <= 1 || n < 64) {
    fn(0, n, 0);
    return;
  }
  const uint64_t chunk = std::max<uint64_t>(1, n / (static_cast<uint64_t>(workers) * 64));
  std::atomic<uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const uint64_t lo = next.fetch_add(chunk);
        if (lo >= n) break;
        fn(lo, std::min(n, lo + chunk), w);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace addcyc
