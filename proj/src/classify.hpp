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

// Classification of all additive cyclic codes of given lengths.

#ifndef ADDCYC_CLASSIFY_HPP_
#define ADDCYC_CLASSIFY_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kernelrank.hpp"

namespace addcyc {

struct ClassificationRecord {
  CodeSpec spec;
  CodeType type;
  int rank = 0;
  int ker = 0;
  bool linear = false;
  // "both" when oracle and structural ran and agreed, else the one that ran.
  std::string rank_method, ker_method;
  // Structural values when both methods ran; they differ from rank/ker on a mismatch.
  std::optional<int> rank_structural, ker_structural;
  bool agreement() const {
    return (!rank_structural || *rank_structural == rank) && (!ker_structural || *ker_structural == ker);
  }
};

struct Classification {
  std::vector<ClassificationRecord> records;
  bool partial = false;  // b was sampled, or some spec exceeded its budget
  std::vector<std::string> skipped;  // specs that exceeded budgets
};

std::vector<CodeSpec> enumerate_code_specs(int p, int alpha, int beta, uint64_t b_cap = 81,
                                           bool* partial = nullptr);

// Kernel and rank of one spec: both methods when the oracle fits
// (p^(2 delta) within the pair budget), else structural only.
ClassificationRecord classify_spec(const CodeSpec& spec, const RunConfig& cfg);

Classification classify(int p, int alpha, int beta, const RunConfig& cfg = {},
                        uint64_t b_cap = 81);
Classification classify_specs(const std::vector<CodeSpec>& specs, const RunConfig& cfg);

// ---------------------------------------------------- rank/kernel table

struct TableRow {
  std::string n_kind;  // "any", "q", "q^2"
  std::string f, g, h;  // labels: "1", "x-1", "a", "(x-1)b", "*", ...
  std::string rank_formula, ker_formula;
  CodeSpec spec;
  int gamma = 0, delta = 0;
  int rank_expected = 0, ker_expected = 0;
  int rank = 0, ker = 0;
  bool oracle_run = false;  // false: oracle skipped, structural only
  // With the oracle run, rank/ker are oracle values and these the structural ones.
  int rank_structural = 0, ker_structural = 0;
  bool agreement() const { return rank == rank_structural && ker == ker_structural; }
  bool rank_match() const { return rank == rank_expected; }
  bool ker_match() const { return ker == ker_expected; }
};

struct TableReport {
  int p = 0, n = 0;
  std::string n_kind;
  PolyP2 a, b;  // the two non-linear factors
  bool circle_identity = false;  // n = q: abar (x) abar = bbar (x) bbar = (x^n-1)/(x-1)
  std::vector<TableRow> rows;
  int splits_covered = 0;  // distinct (f, h, g) splits touched
  bool all_match() const;
  std::string render() const;
};

struct TableOptions {
  // Rows with gamma + delta above this run structurally only.
  int oracle_max_gamma_delta = 8;
};

TableReport table_q_case(int p, int n, const RunConfig& cfg = {}, const TableOptions& opt = {});

// ------------------------------------------------------------- existence

struct TypeQuery {
  int gamma = 0, delta = 0;
  std::optional<int> kappa;  // nullopt: any kappa
};

struct TypeExistence {
  bool exists = false;
  bool gate_passed = false;  // 0 < delta + gamma <= beta + kappa, kappa <= min(alpha, gamma)
  std::optional<CodeSpec> witness;
  // Exhaustion certificate.
  int a_count = 0;          // divisors of x^alpha - 1
  int triple_count = 0;     // (f, h, g) splits
  int degree_candidates = 0;  // (a, f, h, g) with formula gamma and delta
  uint64_t specs_checked = 0;  // (a, b, f, h, g) typed by matrix
  std::string certificate() const;
};

TypeExistence cyclic_type_exists(int p, int alpha, int beta, const TypeQuery& type,
                                 uint64_t b_cap = 81);

// ------------------------------------------------------------- pair grid

struct PairGrid {
  int p = 0, alpha = 0, beta = 0;
  TypeQuery type;
  // (rank, ker) -> first witness
  std::map<std::pair<int, int>, CodeSpec> achieved;
  std::set<std::pair<int, int>> theoretical;
  int specs_of_type = 0;
  bool partial = false;
  bool achieved_in_box() const;
  // Bullet grid with rows = ker (descending) and columns = rank.
  std::string render(bool cyclic) const;
};

// Pairs admitted by the general existence bounds for one kappa.
std::set<std::pair<int, int>> theoretical_pairs(int p, int beta, int gamma, int delta, int kappa);

PairGrid pair_grid(int p, int alpha, int beta, const TypeQuery& type, const RunConfig& cfg = {},
                   uint64_t b_cap = 81);

}  // namespace addcyc

#endif  // ADDCYC_CLASSIFY_HPP_
