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

// Kernel K(C) and span R(C) of the Gray image.

#ifndef ADDCYC_KERNELRANK_HPP_
#define ADDCYC_KERNELRANK_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gray.hpp"

namespace addcyc {

enum class Method { kOracle, kStructural, kBoth };
const char* method_name(Method m);
Method parse_method(const std::string& s);

struct KernelResult {
  int dim = 0;
  Method method = Method::kOracle;
  bool agreement = true;
  std::optional<int> oracle_dim, structural_dim;
  // Structural answer: K(C) as a spec and the polynomial k'.
  std::optional<CodeSpec> spec;
  std::optional<PolyP2> k_poly;
  // Minimal linear divisors k_1, ..., k_s.
  std::vector<PolyP2> minimal_divisors;
  // K(C) itself (oracle when run, else structural).
  std::optional<AdditiveCode> code;
};

struct RankResult {
  int dim = 0;
  Method method = Method::kOracle;
  bool agreement = true;
  std::optional<int> oracle_dim, structural_dim;
  // Rank of the span of Phi over every codeword, when |C| fits the word budget.
  std::optional<int> full_span_dim;
  std::optional<CodeSpec> spec;
  std::optional<PolyP2> r_poly;
  std::optional<AdditiveCode> code;
};

// Residue set S = {u : p P(u, v) in C for all v}; K = preimage of S in C.
KernelResult kernel_oracle(const AdditiveCode& code, const RunConfig& cfg = {});
KernelResult kernel_oracle(const CodeSpec& spec, const RunConfig& cfg = {});
// Divisibility-minimal k | g with D_k linear; k' = their lcm; K = D_{k'}.
KernelResult kernel_structural(const CodeSpec& spec, const RunConfig& cfg = {});
// Both methods without throwing; dim is the oracle value, agreement records the comparison.
KernelResult kernel_compare(const CodeSpec& spec, const RunConfig& cfg = {});
// Runs the requested method(s); with both, a disagreement throws kStructuralMismatch.
KernelResult kernel(const CodeSpec& spec, Method method, const RunConfig& cfg = {});
// kappa1 + kappa2 + ker of the Y-code of the rows after the first kappa.
int kernel_dimension_split(const CodeSpec& spec, const RunConfig& cfg = {});

// Row reduction of Phi(v_j), Phi(p v_j), Phi(u_i) and Phi(p P(u, v)) over
// all residue pairs; cross-checked against the full span under the word budget.
RankResult rank_oracle(const AdditiveCode& code, const RunConfig& cfg = {});
RankResult rank_oracle(const CodeSpec& spec, const RunConfig& cfg = {});
// First r | f (sorted) with <fh + pf/r> linear; R = ((a', 0), (b', fh + pf/r)).
RankResult rank_structural(const CodeSpec& spec, const RunConfig& cfg = {});
RankResult rank_compare(const CodeSpec& spec, const RunConfig& cfg = {});
RankResult rank(const CodeSpec& spec, Method method, const RunConfig& cfg = {});
int rank_dimension_split(const CodeSpec& spec, const RunConfig& cfg = {});

// Span of all carries p P(u, v) as a Z_p subspace of Z_p^beta.
ZpBasis carry_span(const AdditiveCode& code, ScanMode mode, const RunConfig& cfg);
// Rank of Phi(C) given its carry span.
int gray_span_rank(const AdditiveCode& code, const ZpBasis& carries);

struct RCReport {
  bool shift_closed = false;
  bool contains_code = false;
  bool linear = false;
  bool y_projection_identity = false;  // R(C)_Y == R(C_Y)
  bool r_divides_f = false;
  bool ar_divides_a = false;
  bool minimal = false;  // R(C) inside every linear cyclic code containing C
  int lattice_checked = 0;
  bool ok() const {
    return shift_closed && contains_code && linear && y_projection_identity && r_divides_f &&
           ar_divides_a && minimal;
  }
};
RCReport verify_RC_properties(const CodeSpec& spec, const RunConfig& cfg = {});

}  // namespace addcyc

#endif  // ADDCYC_KERNELRANK_HPP_
