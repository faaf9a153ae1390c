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

// Linear algebra over Z_p on uint8_t vectors.

#ifndef ADDCYC_ZP_LINALG_HPP_
#define ADDCYC_ZP_LINALG_HPP_

#include <cstdint>
#include <vector>

#include "base.hpp"

namespace addcyc {

using Vec = std::vector<uint8_t>;

// Incrementally maintained reduced row-echelon basis.
class ZpBasis {
 public:
  ZpBasis(int p, int length);

  // Returns true iff v was independent of the current span.
  bool add(Vec v);
  bool contains(Vec v) const;
  // Reduces v in place against the basis; returns true iff it became zero.
  bool reduce(Vec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int length() const { return n_; }
  bool full() const { return rank() == n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

 private:
  int p_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
  std::vector<int> inv_;
};

// Basis of {c : sum c_i rows_i = 0}.
std::vector<Vec> left_kernel(int p, const std::vector<Vec>& rows, int length);

// Basis of the orthogonal complement {h : <h, w> = 0 for w in rows}.
std::vector<Vec> orthogonal_complement(int p, const std::vector<Vec>& rows, int length);

}  // namespace addcyc

#endif  // ADDCYC_ZP_LINALG_HPP_
