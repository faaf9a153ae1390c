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

#include "kernelrank.hpp"

#include <mutex>

#include "scan.hpp"

namespace addcyc {

const char* method_name(Method m) {
  switch (m) {
    case Method::kOracle: return "oracle";
    case Method::kStructural: return "structural";
    case Method::kBoth: return "both";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "oracle") return Method::kOracle;
  if (s == "structural") return Method::kStructural;
  if (s == "both") return Method::kBoth;
  fail(ErrorCode::kParse, "unknown method '" + s + "'");
}

namespace {

bool linear(const AdditiveCode& c, const RunConfig& cfg) {
  return gray_image_linearity(c, ScanMode::kAuto, cfg).linear;
}

Row times_p(const Row& r, int p) {
  Row out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = static_cast<uint8_t>(r[i] * p % (p * p));
  return out;
}

// The alpha = 0 code spanned by the Y parts of the standard-form rows after the first kappa.
AdditiveCode cprime_y(const AdditiveCode& code) {
  const StdGenMatrix sf = standard_form(code);
  std::vector<Row> rows;
  for (size_t i = sf.kappa; i < sf.rows.size(); ++i) rows.push_back(sf.rows[i].y);
  return AdditiveCode(code.base(), 0, code.beta(), rows);
}

}  // namespace

// ------------------------------------------------------------------ kernel

KernelResult kernel_oracle(const AdditiveCode& code, const RunConfig& cfg) {
  const ResidueScanner sc(code);
  const int p = sc.p();
  const ResidueScanner::Table t = sc.all(cfg.residue_budget);
  const uint64_t n = t.size();
  std::vector<uint8_t> in_s(n, 0);
  parallel_ranges(n, cfg.workers, [&](uint64_t lo, uint64_t hi, int) {
    for (uint64_t i = lo; i < hi; ++i) {
      bool ok = true;
      for (uint64_t j = 0; j < n && ok; ++j) ok = sc.w().contains(sc.carry(t, i, t, j));
      in_s[i] = ok;
    }
  });
  ZpBasis s(p, std::max(sc.delta(), 1));
  uint64_t size = 0;
  for (uint64_t i = 0; i < n; ++i) {
    if (!in_s[i]) continue;
    ++size;
    if (sc.delta() > 0) s.add(sc.coords(i));
  }
  const int r = sc.delta() > 0 ? s.rank() : 0;
  if (ipow_capped(p, r, ~0ULL) != size) {
    fail(ErrorCode::kNonPowerCardinality,
         "kernel residue set has " + std::to_string(size) + " elements");
  }
  std::vector<Row> rows;
  if (sc.delta() > 0) {
    for (const Vec& c : s.rows()) rows.push_back(sc.lift(c));
  }
  for (const Row& v : code.v_rows()) rows.push_back(times_p(v, p));
  const std::vector<Row> gens = code.generators();
  rows.insert(rows.end(), gens.begin() + code.delta(), gens.end());
  KernelResult res;
  res.method = Method::kOracle;
  res.code.emplace(code.base(), code.alpha(), code.beta(), rows);
  res.dim = res.code->log_size();
  res.oracle_dim = res.dim;
  if (res.dim != code.gamma() + code.delta() + r) {
    fail(ErrorCode::kNonPowerCardinality, "kernel dimension bookkeeping");
  }
  return res;
}

KernelResult kernel_oracle(const CodeSpec& spec, const RunConfig& cfg) {
  return kernel_oracle(AdditiveCode::of(spec), cfg);
}

KernelResult kernel_structural(const CodeSpec& input, const RunConfig& cfg) {
  const CodeSpec spec = standard_spec(input);
  const XnFactorization& fact = spec.fact();
  const uint64_t gm = fact.mask_of(spec.g());
  std::vector<uint64_t> lin;
  for (uint64_t km : fact.divisor_masks(gm)) {
    const CodeSpec d = subcode_for_divisor(spec, fact.product(km));
    if (linear(AdditiveCode::of(d), cfg)) lin.push_back(km);
  }
  KernelResult res;
  res.method = Method::kStructural;
  uint64_t kprime = 0;
  for (uint64_t k : lin) {
    bool minimal = true;
    for (uint64_t o : lin) {
      if (o != k && (o & ~k) == 0) minimal = false;
    }
    if (minimal) {
      res.minimal_divisors.push_back(fact.product(k));
      kprime |= k;
    }
  }
  res.k_poly = fact.product(kprime);
  res.spec = subcode_for_divisor(spec, *res.k_poly);
  res.code = AdditiveCode::of(*res.spec);
  if (!linear(*res.code, cfg)) {
    fail(ErrorCode::kStructuralMismatch,
         "D_k' with k' = " + res.k_poly->str() + " has a nonlinear Gray image");
  }
  res.dim = res.code->log_size();
  res.structural_dim = res.dim;
  return res;
}

KernelResult kernel_compare(const CodeSpec& spec, const RunConfig& cfg) {
  KernelResult o = kernel_oracle(spec, cfg);
  KernelResult s = kernel_structural(spec, cfg);
  s.method = Method::kBoth;
  s.oracle_dim = o.dim;
  s.agreement = o.dim == s.dim && *o.code == *s.code;
  s.dim = o.dim;
  s.code = std::move(o.code);
  return s;
}

KernelResult kernel(const CodeSpec& spec, Method method, const RunConfig& cfg) {
  if (method == Method::kOracle) return kernel_oracle(spec, cfg);
  if (method == Method::kStructural) return kernel_structural(spec, cfg);
  KernelResult s = kernel_compare(spec, cfg);
  if (!s.agreement) {
    fail(ErrorCode::kStructuralMismatch, "kernel: oracle dim " + std::to_string(s.dim) +
                                             ", structural dim " +
                                             std::to_string(*s.structural_dim) + " (k' = " +
                                             s.k_poly->str() + ") for " + spec.key());
  }
  return s;
}

int kernel_dimension_split(const CodeSpec& spec, const RunConfig& cfg) {
  const AdditiveCode code = AdditiveCode::of(spec);
  return code.kappa() + kernel_oracle(cprime_y(code), cfg).dim;
}

// -------------------------------------------------------------------- rank

ZpBasis carry_span(const AdditiveCode& code, ScanMode mode, const RunConfig& cfg) {
  const ResidueScanner sc(code);
  const int p = sc.p();
  if (mode == ScanMode::kAuto) {
    uint64_t pairs = 1;
    mode = ScanMode::kExhaustive;
    for (int i = 0; i < 2 * sc.delta(); ++i) {
      if (pairs > cfg.pair_budget / p) {
        mode = ScanMode::kReduced;
        break;
      }
      pairs *= p;
    }
  }
  ResidueScanner::Table t;
  std::vector<int> weight;
  const int max_weight = carry_degree(p);
  if (mode == ScanMode::kExhaustive) {
    t = sc.all(cfg.residue_budget);
  } else {
    const std::vector<Vec> low = sc.low_weight(max_weight);
    t = sc.of(low);
    for (const Vec& c : low) {
      int s = 0;
      for (uint8_t d : c) s += d;
      weight.push_back(s);
    }
  }
  const uint64_t n = t.size();
  const int workers = std::max(1, cfg.workers);
  std::vector<MaskSpan> spans(workers, sc.w());
  parallel_ranges(n, workers, [&](uint64_t lo, uint64_t hi, int w) {
    MaskSpan& span = spans[w];
    for (uint64_t i = lo; i < hi; ++i) {
      for (uint64_t j = i; j < n; ++j) {
        if (!weight.empty() && weight[i] + weight[j] > max_weight) continue;
        const uint64_t c = sc.carry(t, i, t, j);
        if (!span.contains(c)) span.add(c);
      }
    }
  });
  ZpBasis out = spans[0].basis();
  for (int w = 1; w < workers; ++w) {
    for (const Vec& v : spans[w].basis().rows()) out.add(v);
  }
  return out;
}

int gray_span_rank(const AdditiveCode& code, const ZpBasis& carries) {
  const PrimeBase& base = code.base();
  const int p = base.p(), alpha = code.alpha(), beta = code.beta();
  ZpBasis span(p, alpha + p * beta);
  for (const Row& v : code.v_rows()) {
    span.add(gray_row(v, alpha, base));
    span.add(gray_row(times_p(v, p), alpha, base));
  }
  for (const Row& r : code.generators()) span.add(gray_row(r, alpha, base));
  for (const Vec& c : carries.rows()) {
    Vec g(alpha + p * beta, 0);
    for (int i = 0; i < beta; ++i) {
      for (int k = 0; k < p; ++k) g[alpha + i * p + k] = c[i];
    }
    span.add(std::move(g));
  }
  return span.rank();
}

RankResult rank_oracle(const AdditiveCode& code, const RunConfig& cfg) {
  const int p = code.base().p();
  const ZpBasis carries = carry_span(code, ScanMode::kExhaustive, cfg);
  RankResult res;
  res.method = Method::kOracle;
  res.dim = gray_span_rank(code, carries);
  res.oracle_dim = res.dim;
  std::vector<Row> extra;
  for (const Vec& c : carries.rows()) {
    Row r(code.length(), 0);
    for (int i = 0; i < code.beta(); ++i) r[code.alpha() + i] = static_cast<uint8_t>(c[i] * p);
    extra.push_back(std::move(r));
  }
  res.code = code.extended(extra);
  if (res.code->log_size() != res.dim) {
    fail(ErrorCode::kStructuralMismatch, "rank oracle: |C + carries| = p^" +
                                             std::to_string(res.code->log_size()) +
                                             " but the Gray span has rank " + std::to_string(res.dim));
  }
  uint64_t words = 1;
  bool fits = true;
  for (int i = 0; i < code.log_size(); ++i) {
    if (words > cfg.word_budget / p) {
      fits = false;
      break;
    }
    words *= p;
  }
  if (fits) {
    ZpBasis full(p, code.alpha() + p * code.beta());
    code.enumerate(cfg.word_budget, [&](const Row& r) {
      if (!full.full()) full.add(gray_row(r, code.alpha(), code.base()));
    });
    res.full_span_dim = full.rank();
    if (full.rank() != res.dim) {
      fail(ErrorCode::kStructuralMismatch, "rank oracle " + std::to_string(res.dim) +
                                               " differs from full span rank " +
                                               std::to_string(full.rank()));
    }
  }
  return res;
}

RankResult rank_oracle(const CodeSpec& spec, const RunConfig& cfg) {
  return rank_oracle(AdditiveCode::of(spec), cfg);
}

RankResult rank_structural(const CodeSpec& input, const RunConfig& cfg) {
  const CodeSpec spec = standard_spec(input);
  const XnFactorization& fact = spec.fact();
  const PrimeBase& base = spec.base();
  const uint64_t fm = fact.mask_of(spec.f());
  RankResult res;
  res.method = Method::kStructural;
  uint64_t rm = fm;
  for (uint64_t m : fact.divisor_masks(fm)) {
    const CodeSpec y = CodeSpec::make(spec.fact_ptr(), 0, PolyP::constant(base, 1), PolyP::zero(base),
                                      fact.product(fm & ~m), spec.h() * fact.product(m), spec.g());
    if (linear(AdditiveCode::of(y), cfg)) {
      rm = m;
      break;
    }
  }
  const PolyP2 r = fact.product(rm);
  PolyP a2 = spec.a(), b2 = spec.b();
  if (spec.alpha() > 0) {
    const PolyP mu = reduce_mod_p(bezout_pair(spec).mu);
    const PolyP mbg = (mu * reduce_mod_p(spec.g()) * spec.b()).mod_xn(spec.alpha());
    a2 = poly_gcd(spec.a(), mbg);
    b2 = (spec.b() - mbg).mod_xn(spec.alpha());
  }
  res.r_poly = r;
  res.spec = CodeSpec::make(spec.fact_ptr(), spec.alpha(), a2, b2, fact.product(fm & ~rm),
                            spec.h() * r, spec.g());
  res.code = AdditiveCode::of(*res.spec);
  const AdditiveCode c = AdditiveCode::of(spec);
  if (!res.code->contains_code(c)) {
    fail(ErrorCode::kStructuralMismatch, "structural R(C) does not contain C for " + spec.key());
  }
  if (!linear(*res.code, cfg)) {
    fail(ErrorCode::kStructuralMismatch, "structural R(C) with r = " + r.str() +
                                             " has a nonlinear Gray image");
  }
  res.dim = res.code->log_size();
  res.structural_dim = res.dim;
  return res;
}

RankResult rank_compare(const CodeSpec& spec, const RunConfig& cfg) {
  RankResult o = rank_oracle(spec, cfg);
  RankResult s = rank_structural(spec, cfg);
  s.method = Method::kBoth;
  s.oracle_dim = o.dim;
  s.full_span_dim = o.full_span_dim;
  s.agreement = o.dim == s.dim && *o.code == *s.code;
  s.dim = o.dim;
  return s;
}

RankResult rank(const CodeSpec& spec, Method method, const RunConfig& cfg) {
  if (method == Method::kOracle) return rank_oracle(spec, cfg);
  if (method == Method::kStructural) return rank_structural(spec, cfg);
  RankResult s = rank_compare(spec, cfg);
  if (!s.agreement) {
    fail(ErrorCode::kStructuralMismatch, "rank: oracle " + std::to_string(s.dim) +
                                             ", structural " + std::to_string(*s.structural_dim) +
                                             " (r = " + s.r_poly->str() + ") for " + spec.key());
  }
  return s;
}

int rank_dimension_split(const CodeSpec& spec, const RunConfig& cfg) {
  const AdditiveCode code = AdditiveCode::of(spec);
  return code.kappa() + rank_oracle(cprime_y(code), cfg).dim;
}

// ------------------------------------------------------------------ report

RCReport verify_RC_properties(const CodeSpec& spec, const RunConfig& cfg) {
  RCReport rep;
  const AdditiveCode c = AdditiveCode::of(spec);
  const RankResult r = rank_structural(spec, cfg);
  const AdditiveCode& rc = *r.code;
  rep.shift_closed = rc.is_shift_invariant();
  rep.contains_code = rc.contains_code(c);
  rep.linear = linear(rc, cfg);
  const RankResult ry = rank_structural(project_y(spec), cfg);
  rep.y_projection_identity = rc.y_projection() == *ry.code;
  rep.r_divides_f = divides(*r.r_poly, spec.f());
  rep.ar_divides_a = spec.alpha() == 0 || divides(r.spec->a(), spec.a());
  rep.minimal = true;
  for (const CodeSpec& d : enumerate_specs(spec.fact_ptr(), spec.alpha(), 81)) {
    const AdditiveCode dc = AdditiveCode::of(d);
    if (!dc.contains_code(c) || !linear(dc, cfg)) continue;
    ++rep.lattice_checked;
    if (!dc.contains_code(rc)) rep.minimal = false;
  }
  return rep;
}

}  // namespace addcyc
