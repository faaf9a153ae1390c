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

// Carry scans over the residues of a code.
//
// Carries depend only on y mod p, and y mod p ranges over the span of the
// residues of the order-p^2 rows. A residue is addressed by its coordinate
// vector in that basis; index i <-> base-p digits of i, low digit first.

#ifndef ADDCYC_SCAN_HPP_
#define ADDCYC_SCAN_HPP_

#include <cstdint>
#include <vector>

#include "code.hpp"

namespace addcyc {

// Z_p subspace of Z_p^n (n <= 64) tested on 0/1 vectors given as bitmasks,
// via parity checks against the orthogonal complement.
class MaskSpan {
 public:
  MaskSpan(int p, int n);
  bool contains(uint64_t mask) const;
  // Returns true iff the span grew.
  bool add(uint64_t mask);
  void add_vec(const Vec& v);
  int rank() const { return basis_.rank(); }
  const ZpBasis& basis() const { return basis_; }

 private:
  void rebuild();

  int p_, n_;
  ZpBasis basis_;
  // checks_[h * (p-1) + (t-1)] = positions where check row h has value t.
  std::vector<uint64_t> checks_;
  int nchecks_ = 0;
};

class ResidueScanner {
 public:
  explicit ResidueScanner(const AdditiveCode& code);

  int p() const { return p_; }
  int beta() const { return beta_; }
  int delta() const { return delta_; }
  const AdditiveCode& code() const { return code_; }

  // Masks for a batch of residues.
  struct Table {
    int stride = 0;             // p - 1
    std::vector<uint64_t> eq;   // eq[i*stride + t-1]: positions equal to t
    std::vector<uint64_t> ge;   // ge[i*stride + s-1]: positions >= s
    size_t size() const { return stride ? eq.size() / stride : 0; }
  };

  // All p^delta residues in index order; throws kBudgetExceeded beyond budget.
  Table all(uint64_t budget) const;
  Table of(const std::vector<Vec>& coords) const;
  uint64_t count(uint64_t cap) const;  // p^delta, throws above cap

  uint64_t carry(const Table& a, size_t i, const Table& b, size_t j) const {
    uint64_t c = 0;
    const uint64_t* eu = &a.eq[i * a.stride];
    const uint64_t* gv = &b.ge[j * b.stride];
    for (int t = 1; t < p_; ++t) c |= eu[t - 1] & gv[p_ - t - 1];
    return c;
  }

  // Coordinate vectors with digit sum <= w, in increasing index order.
  std::vector<Vec> low_weight(int w) const;
  Vec coords(uint64_t idx) const;
  // Codeword sum_j c_j v_j.
  Row lift(const Vec& coords) const;
  // The word (0, p * c) for a carry mask.
  Row carry_row(uint64_t mask) const;

  // W = {c : (0, p c) in C}.
  const MaskSpan& w() const { return w_; }

 private:
  const AdditiveCode& code_;
  int p_, beta_, delta_;
  std::vector<Vec> basis_;  // residues of V rows
  MaskSpan w_;
};

// Runs fn(lo, hi, worker) over [0, n) split across workers.
void parallel_ranges(uint64_t n, int workers,
                     const std::function<void(uint64_t, uint64_t, int)>& fn);

}  // namespace addcyc

#endif  // ADDCYC_SCAN_HPP_
