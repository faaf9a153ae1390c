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

// Z_pZ_{p^2}-additive cyclic codes <(a, 0), (b, fh + pf)>.
//
// Internally every codeword lives in Z_{p^2}^(alpha+beta) with the X block
// embedded as p*x, which turns the code into a Z_{p^2}-module.

#ifndef ADDCYC_CODE_HPP_
#define ADDCYC_CODE_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "factor.hpp"
#include "zp_linalg.hpp"

namespace addcyc {

struct MixedWord {
  Vec x;  // over Z_p
  Vec y;  // over Z_{p^2}
  bool operator==(const MixedWord& o) const { return x == o.x && y == o.y; }
  bool operator<(const MixedWord& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

using Row = Vec;  // embedded word, length alpha + beta, entries in Z_{p^2}

Row embed(const MixedWord& w, const PrimeBase& base);
MixedWord unembed(const Row& r, int alpha, const PrimeBase& base);

struct CodeType {
  int alpha = 0, beta = 0;
  int gamma = 0, delta = 0, kappa = 0;
  int kappa1 = 0, kappa2 = 0, delta1 = 0, delta2 = 0;
  bool operator==(const CodeType& o) const = default;
};

struct TypeReport {
  CodeType formula;  // generator-polynomial formulas
  CodeType matrix;   // block sizes of the standard form
  bool agree() const {
    return formula.gamma == matrix.gamma && formula.delta == matrix.delta &&
           formula.kappa == matrix.kappa;
  }
};

// Generator pair (X part over Z_p, Y part over Z_{p^2}).
struct GenPair {
  PolyP x;
  PolyP2 y;
};

class CodeSpec {
 public:
  static CodeSpec make(std::shared_ptr<const XnFactorization> fact, int alpha, PolyP a,
                       PolyP b, PolyP2 f, PolyP2 h, PolyP2 g);
  static CodeSpec make(const PrimeBase& base, int alpha, int beta, PolyP a, PolyP b,
                       PolyP2 f, PolyP2 h, PolyP2 g);

  const PrimeBase& base() const { return fact_->base(); }
  int p() const { return base().p(); }
  int alpha() const { return alpha_; }
  int beta() const { return fact_->n(); }
  const PolyP& a() const { return a_; }
  const PolyP& b() const { return b_; }
  const PolyP2& f() const { return f_; }
  const PolyP2& h() const { return h_; }
  const PolyP2& g() const { return g_; }
  const XnFactorization& fact() const { return *fact_; }
  std::shared_ptr<const XnFactorization> fact_ptr() const { return fact_; }

  // fh + pf
  PolyP2 y_generator() const;
  std::vector<GenPair> generators() const;
  std::string key() const;
  bool operator<(const CodeSpec& o) const { return key() < o.key(); }

 private:
  std::shared_ptr<const XnFactorization> fact_;
  int alpha_ = 0;
  PolyP a_, b_;
  PolyP2 f_, h_, g_;
};

// The subgroup generated by a set of embedded rows, in two-tier form:
// order-p^2 rows V with unit pivots in Y, and a Z_p basis U of the rest
// (the embedded word of u is p*u). X columns are eliminated first in U.
class AdditiveCode {
 public:
  AdditiveCode(const PrimeBase& base, int alpha, int beta, const std::vector<Row>& gens);
  static AdditiveCode of(const CodeSpec& spec);

  const PrimeBase& base() const { return base_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int length() const { return alpha_ + beta_; }
  int gamma() const { return static_cast<int>(u_.rank()); }
  int delta() const { return static_cast<int>(v_.size()); }
  int kappa() const;
  int log_size() const { return gamma() + 2 * delta(); }

  const std::vector<Row>& v_rows() const { return v_; }
  const std::vector<int>& v_pivots() const { return vpiv_; }
  const ZpBasis& u_basis() const { return u_; }

  bool contains(const Row& w) const;
  bool contains(const MixedWord& w) const;
  bool contains_code(const AdditiveCode& o) const;
  bool operator==(const AdditiveCode& o) const;

  // V rows followed by the embedded U rows.
  std::vector<Row> generators() const;
  CodeType type() const;
  bool is_shift_invariant() const;

  // Y residues of the V rows: a Z_p basis of C's y-part mod p.
  std::vector<Vec> y_residue_basis() const;
  // Basis of W = {c in Z_p^beta : (0, p c) in C}.
  std::vector<Vec> w_basis() const;
  // Dimension over Z_p of the X projection.
  int x_dimension() const;

  AdditiveCode y_projection() const;
  AdditiveCode x_only_subcode() const;
  AdditiveCode y_only_subcode() const;
  // C + <extra rows>
  AdditiveCode extended(const std::vector<Row>& extra) const;

  // Calls fn for every codeword (mixed-radix over V then U).
  void enumerate(uint64_t budget, const std::function<void(const Row&)>& fn) const;

 private:
  PrimeBase base_;
  int alpha_, beta_;
  std::vector<Row> v_;
  std::vector<int> vpiv_;
  ZpBasis u_;
};

Row cyclic_shift(const Row& w, int alpha);
MixedWord cyclic_shift(const MixedWord& w);

GenPair star_multiply(const PolyP2& scalar, const GenPair& word, int alpha, int beta);

TypeReport compute_type(const CodeSpec& spec);

struct StdGenMatrix {
  int alpha = 0, beta = 0;
  int kappa = 0, gamma_minus_kappa = 0, delta = 0;
  // Column orders: X = [kappa pivots | rest], Y = [rest | gamma-kappa pivots | delta pivots].
  std::vector<int> x_order, y_order;
  // Rows in the block order kappa, gamma-kappa, delta; entries are the
  // actual codeword symbols (X over Z_p, Y over Z_{p^2}), original columns.
  std::vector<MixedWord> rows;
  // Named blocks, read from `rows` in permuted coordinates.
  std::vector<Vec> t_prime, t2, t1, s_prime, s, r;
};

StdGenMatrix standard_form(const CodeSpec& spec);
StdGenMatrix standard_form(const AdditiveCode& code);

bool contains(const CodeSpec& spec, const MixedWord& w);
// Hash-set membership over the enumerated code.
bool contains_by_enumeration(const AdditiveCode& code, const MixedWord& w, uint64_t budget);

std::vector<MixedWord> enumerate_words(const CodeSpec& spec, uint64_t budget);
// Distinct images of C under reduction of the y-part mod p.
std::vector<MixedWord> enumerate_residues(const CodeSpec& spec, uint64_t budget);

std::vector<GenPair> subcode_order_p(const CodeSpec& spec);

struct BezoutPair {
  PolyP2 lambda, mu;
};
BezoutPair bezout_pair(const CodeSpec& spec);

struct ThreeGeneratorForm {
  BezoutPair bezout;
  PolyP b_prime;
  std::vector<GenPair> gens;  // (a,0), (b', fh), (mu bar b gbar, pf)
};
ThreeGeneratorForm three_generator_form(const CodeSpec& spec);

CodeSpec subcode_for_divisor(const CodeSpec& spec, const PolyP2& k);
CodeSpec intersect_cyclic_zp2(const CodeSpec& c1, const CodeSpec& c2);
CodeSpec intersect_subcodes(const CodeSpec& spec, const PolyP2& k1, const PolyP2& k2);

// a | b*hbar*gbar mod x^alpha - 1: the X-only subcode is exactly <a>.
bool is_standard_spec(const CodeSpec& spec);
// Same code with a replaced by gcd(a, b*hbar*gbar) and b reduced mod it.
CodeSpec standard_spec(const CodeSpec& spec);

PolyP project_x(const CodeSpec& spec);
CodeSpec project_y(const CodeSpec& spec);

struct Separability {
  bool by_size;
  bool by_type;
};
Separability is_separable(const CodeSpec& spec);

// Monic divisors of x^n - 1 over Z_p (n need not be coprime to p), sorted.
std::vector<PolyP> divisors_of_xn_minus_1(const PrimeBase& base, int n);

// Every spec (a, b mod a, f, h, g) for the given lengths. b runs over all
// residues mod a when p^deg(a) <= b_cap, else over sparse representatives
// (0 and the monomials c x^i), and *partial is set.
// Standard-form specs only (see is_standard_spec).
std::vector<CodeSpec> enumerate_specs(std::shared_ptr<const XnFactorization> fact, int alpha,
                                      uint64_t b_cap, bool* partial = nullptr);

// Rows x^i * gen for all shifts.
std::vector<Row> shift_rows(const PrimeBase& base, int alpha, int beta,
                            const std::vector<GenPair>& gens);

}  // namespace addcyc

#endif  // ADDCYC_CODE_HPP_
