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

#include "zp_linalg.hpp"

namespace addcyc {

ZpBasis::ZpBasis(int p, int length) : p_(p), n_(length), inv_(p, 0) {
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if (a * b % p == 1) inv_[a] = b;
    }
  }
}

bool ZpBasis::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int c = v[piv_[r]];
    if (c == 0) continue;
    const Vec& row = rows_[r];
    const int k = p_ - c;
    for (int i = piv_[r]; i < n_; ++i) {
      if (row[i]) v[i] = static_cast<uint8_t>((v[i] + k * row[i]) % p_);
    }
  }
  for (uint8_t x : v) {
    if (x) return false;
  }
  return true;
}

bool ZpBasis::contains(Vec v) const { return reduce(v); }

bool ZpBasis::add(Vec v) {
  if (reduce(v)) return false;
  int c = 0;
  while (v[c] == 0) ++c;
  const int s = inv_[v[c]];
  for (int i = c; i < n_; ++i) v[i] = static_cast<uint8_t>(v[i] * s % p_);
  // Keep the basis fully reduced in column c.
  for (Vec& row : rows_) {
    const int e = row[c];
    if (e == 0) continue;
    const int k = p_ - e;
    for (int i = c; i < n_; ++i) {
      if (v[i]) row[i] = static_cast<uint8_t>((row[i] + k * v[i]) % p_);
    }
  }
  // Insert sorted by pivot column so reduce() sweeps left to right.
  size_t pos = 0;
  while (pos < piv_.size() && piv_[pos] < c) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  piv_.insert(piv_.begin() + pos, c);
  return true;
}

std::vector<Vec> left_kernel(int p, const std::vector<Vec>& rows, int length) {
  const int m = static_cast<int>(rows.size());
  ZpBasis basis(p, length + m);
  std::vector<Vec> out;
  for (int i = 0; i < m; ++i) {
    Vec aug(length + m, 0);
    for (int j = 0; j < length; ++j) aug[j] = rows[i][j];
    aug[length + i] = 1;
    basis.add(std::move(aug));
  }
  for (size_t r = 0; r < basis.rows().size(); ++r) {
    if (basis.pivots()[r] >= length) {
      const Vec& row = basis.rows()[r];
      out.emplace_back(row.begin() + length, row.end());
    }
  }
  return out;
}

std::vector<Vec> orthogonal_complement(int p, const std::vector<Vec>& rows, int length) {
  ZpBasis basis(p, length);
  for (const Vec& r : rows) basis.add(r);
  std::vector<bool> is_piv(length, false);
  for (int c : basis.pivots()) is_piv[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < length; ++f) {
    if (is_piv[f]) continue;
    Vec h(length, 0);
    h[f] = 1;
    for (size_t r = 0; r < basis.rows().size(); ++r) {
      const int e = basis.rows()[r][f];
      h[basis.pivots()[r]] = static_cast<uint8_t>((p - e) % p);
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace addcyc
