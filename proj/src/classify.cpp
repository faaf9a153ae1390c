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

#include "classify.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>

#include "scan.hpp"

namespace addcyc {

namespace {

std::shared_ptr<const XnFactorization> factorization(int p, int beta) {
  const PrimeBase base(p);
  return std::make_shared<const XnFactorization>(factor_xn_minus_1(base, beta));
}

}  // namespace

std::vector<CodeSpec> enumerate_code_specs(int p, int alpha, int beta, uint64_t b_cap,
                                           bool* partial) {
  return enumerate_specs(factorization(p, beta), alpha, b_cap, partial);
}

ClassificationRecord classify_spec(const CodeSpec& spec, const RunConfig& cfg) {
  ClassificationRecord rec;
  rec.spec = spec;
  const AdditiveCode code = AdditiveCode::of(spec);
  rec.type = code.type();
  const bool oracle = fits_power(spec.p(), 2 * code.delta(), cfg.pair_budget) &&
                      fits_power(spec.p(), code.delta(), cfg.residue_budget);
  const Method m = oracle ? Method::kBoth : Method::kStructural;
  if (oracle) {
    const KernelResult k = kernel_compare(spec, cfg);
    const RankResult r = rank_compare(spec, cfg);
    rec.ker = k.dim;
    rec.rank = r.dim;
    rec.ker_structural = k.structural_dim;
    rec.rank_structural = r.structural_dim;
  } else {
    rec.ker = kernel_structural(spec, cfg).dim;
    rec.rank = rank_structural(spec, cfg).dim;
  }
  rec.ker_method = rec.rank_method = method_name(m);
  const int size = code.log_size();
  rec.linear = gray_image_linearity(code, ScanMode::kAuto, cfg).linear;
  if (rec.linear != (rec.rank == size && rec.ker == size)) {
    fail(ErrorCode::kStructuralMismatch,
         "linearity test disagrees with (rank, ker) for " + spec.key());
  }
  return rec;
}

Classification classify_specs(const std::vector<CodeSpec>& specs, const RunConfig& cfg) {
  Classification out;
  std::vector<std::optional<ClassificationRecord>> recs(specs.size());
  std::vector<std::string> errors(specs.size());
  std::vector<int> fatal(specs.size(), 0);
  std::vector<std::string> fatal_msg(specs.size());
  RunConfig inner = cfg;
  inner.workers = 1;
  parallel_ranges(specs.size(), cfg.workers, [&](uint64_t lo, uint64_t hi, int) {
    for (uint64_t i = lo; i < hi; ++i) {
      try {
        recs[i] = classify_spec(specs[i], inner);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kBudgetExceeded) {
          errors[i] = specs[i].key() + ": " + e.what();
        } else {
          fatal[i] = static_cast<int>(e.code());
          fatal_msg[i] = e.what();
        }
      }
    }
  });
  for (size_t i = 0; i < specs.size(); ++i) {
    if (fatal[i]) throw Error(static_cast<ErrorCode>(fatal[i]), fatal_msg[i]);
    if (recs[i]) {
      out.records.push_back(std::move(*recs[i]));
    } else {
      out.partial = true;
      out.skipped.push_back(errors[i]);
    }
  }
  return out;
}

Classification classify(int p, int alpha, int beta, const RunConfig& cfg, uint64_t b_cap) {
  bool partial = false;
  const std::vector<CodeSpec> specs = enumerate_code_specs(p, alpha, beta, b_cap, &partial);
  Classification c = classify_specs(specs, cfg);
  c.partial = c.partial || partial;
  return c;
}

// ---------------------------------------------------- rank/kernel table

namespace {

// gamma + d*delta + ta*t_a + tb*t_b + k, with an alternative for p = 2.
struct Formula {
  int d, ta, tb, k;
  std::optional<std::array<int, 4>> p2;
  int eval(int p, int gamma, int delta, int t_a, int t_b) const {
    std::array<int, 4> c{d, ta, tb, k};
    if (p == 2 && p2) c = *p2;
    return gamma + c[0] * delta + c[1] * t_a + c[2] * t_b + c[3];
  }
};

std::string formula_text(const std::array<int, 4>& c) {
  std::string s = "g+" + (c[0] == 1 ? std::string("d") : std::to_string(c[0]) + "d");
  if (c[1]) s += "+ta";
  if (c[2]) s += "+tb";
  if (c[3] > 0) s += "+" + std::to_string(c[3]);
  if (c[3] < 0) s += std::to_string(c[3]);
  return s;
}

std::string formula_text(const Formula& f) {
  std::string s = formula_text(std::array<int, 4>{f.d, f.ta, f.tb, f.k});
  if (f.p2) s += " (" + formula_text(*f.p2) + ")";
  return s;
}

// Role masks over the factors {x-1, a, b}: bit 0 = x-1, bit 1 = a, bit 2 = b.
struct Pattern {
  const char* kind;
  const char* f;
  const char* g;
  const char* h;
  Formula rank, ker;
};

int label_mask(const std::string& s) {
  if (s == "1") return 0;
  if (s == "x-1") return 1;
  if (s == "a") return 2;
  if (s == "b") return 4;
  if (s == "ab") return 6;
  if (s == "(x-1)a") return 3;
  if (s == "(x-1)b") return 5;
  return -1;  // "*"
}

const Formula kLin{2, 0, 0, 0, std::nullopt};

std::vector<Pattern> patterns() {
  using A = std::array<int, 4>;
  return {
      {"any", "1", "*", "*", kLin, kLin},
      {"any", "*", "1", "*", kLin, kLin},
      {"any", "*", "x-1", "*", kLin, kLin},
      {"q^2", "a", "(x-1)b", "1", {2, 1, 0, 0, {}}, {1, 0, 0, 1, {}}},
      {"q^2", "a", "b", "x-1", {2, 1, 0, 0, {}}, {1, 0, 0, 0, {}}},
      {"q^2", "b", "(x-1)a", "1", kLin, kLin},
      {"q^2", "b", "a", "x-1", {2, 0, 1, 0, {}}, {1, 0, 0, 0, {}}},
      {"q^2", "x-1", "a", "b", {2, 0, 0, 1, {}}, {1, 0, 0, 0, {}}},
      {"q^2", "x-1", "b", "a", {2, 0, 0, 1, {}}, {1, 0, 0, 0, {}}},
      {"q^2", "x-1", "ab", "1", {2, 0, 0, 1, {}}, {1, 0, 0, 0, {}}},
      {"q^2", "(x-1)a", "b", "1", {2, 1, 0, 1, {}}, {1, 0, 0, 0, {}}},
      {"q^2", "(x-1)b", "a", "1", {2, 0, 0, 1, {}}, {1, 0, 0, 0, {}}},
      {"q", "a", "(x-1)b", "1", {3, 0, 0, -1, {}}, {1, 0, 0, 1, {}}},
      {"q", "a", "b", "x-1", {3, 0, 0, 0, {}}, {1, 0, 0, 0, {}}},
      {"q", "b", "(x-1)a", "1", {3, 0, 0, -1, {}}, {1, 0, 0, 1, {}}},
      {"q", "b", "a", "x-1", {3, 0, 0, 0, {}}, {1, 0, 0, 0, {}}},
      {"q", "x-1", "a", "b", {2, 0, 0, 1, A{2, 0, 0, 0}}, {1, 0, 0, 0, A{2, 0, 0, 0}}},
      {"q", "x-1", "b", "a", {2, 0, 0, 1, A{2, 0, 0, 0}}, {1, 0, 0, 0, A{2, 0, 0, 0}}},
      {"q", "x-1", "ab", "1", {2, 0, 0, 1, {}}, {1, 0, 0, 0, {}}},
      {"q", "(x-1)a", "b", "1", {3, 0, 0, 1, A{3, 0, 0, 0}}, {1, 0, 0, 0, {}}},
      {"q", "(x-1)b", "a", "1", {3, 0, 0, 1, A{3, 0, 0, 0}}, {1, 0, 0, 0, {}}},
  };
}

std::string mask_label(int m) {
  static const char* names[8] = {"1", "x-1", "a", "(x-1)a", "b", "(x-1)b", "ab", "(x-1)ab"};
  return names[m];
}

}  // namespace

bool TableReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const TableRow& r) { return r.rank_match() && r.ker_match(); });
}

std::string TableReport::render() const {
  std::ostringstream os;
  os << "p=" << p << " n=" << n << " (" << n_kind << ")  a=" << a.str() << "  b=" << b.str()
     << "\n";
  if (n_kind == "q") os << "circle identity abar(x)abar = bbar(x)bbar = (x^n-1)/(x-1): "
                        << (circle_identity ? "holds" : "FAILS") << "\n";
  os << "n    f        g        h      gamma delta  rank(formula)        rank  ker(formula)  "
        "       ker  oracle   structural  match\n";
  for (const TableRow& r : rows) {
    char buf[256];
    const std::string st = r.agreement() ? "agrees"
                                         : "(" + std::to_string(r.rank_structural) + "," +
                                               std::to_string(r.ker_structural) + ")";
    std::snprintf(buf, sizeof buf,
                  "%-4s %-8s %-8s %-6s %5d %5d  %-16s=%3d %4d  %-16s=%3d %4d  %-7s  %-10s  %s\n",
                  r.n_kind.c_str(), r.f.c_str(), r.g.c_str(), r.h.c_str(), r.gamma, r.delta,
                  r.rank_formula.c_str(), r.rank_expected, r.rank, r.ker_formula.c_str(),
                  r.ker_expected, r.ker, r.oracle_run ? "run" : "skipped", st.c_str(),
                  r.rank_match() && r.ker_match() ? "match" : "MISMATCH");
    os << buf;
  }
  os << "splits covered: " << splits_covered << "\n";
  return os.str();
}

TableReport table_q_case(int p, int n, const RunConfig& cfg, const TableOptions& opt) {
  const PrimeBase base(p);
  TableReport rep;
  rep.p = p;
  rep.n = n;
  if (n < 3 || n % p == 0) fail(ErrorCode::kHypothesisUnmet, "n must be coprime to p and >= 3");
  int q = 0;
  if (is_prime(n) && mult_order(p, n) == (n - 1) / 2) {
    rep.n_kind = "q";
    q = n;
  } else {
    for (int c = 2; c * c <= n; ++c) {
      if (c * c == n && is_prime(c)) q = c;
    }
    if (q == 0 || mult_order(p, n) != q * (q - 1)) {
      fail(ErrorCode::kHypothesisUnmet,
           "need n prime with ord_n(p) = (n-1)/2, or n = q^2 with p a primitive root mod q^2");
    }
    rep.n_kind = "q^2";
  }
  auto fact = std::make_shared<const XnFactorization>(factor_xn_minus_1(base, n));
  if (fact->size() != 3) fail(ErrorCode::kHypothesisUnmet, "x^n-1 does not have three factors");
  // Factor indices for the roles x-1, a, b.
  int ix = -1, ia = -1, ib = -1;
  for (int i = 0; i < 3; ++i) {
    const std::vector<int>& c = fact->factors()[i].coset;
    if (c.size() == 1 && c[0] == 0) {
      ix = i;
    } else if (rep.n_kind == "q" ? std::count(c.begin(), c.end(), 1) > 0 : c[0] % q == 0) {
      ia = i;
    } else {
      ib = i;
    }
  }
  if (ix < 0 || ia < 0 || ib < 0) fail(ErrorCode::kHypothesisUnmet, "factor roles");
  rep.a = fact->factors()[ia].lifted;
  rep.b = fact->factors()[ib].lifted;
  const PolyP qn = poly_divmod(PolyP::xn_minus_one(base, n), PolyP(base, {-1, 1})).quotient;
  if (rep.n_kind == "q") {
    rep.circle_identity = circle_product(reduce_mod_p(rep.a), 2, *fact) == qn &&
                          circle_product(reduce_mod_p(rep.b), 2, *fact) == qn;
    if (!rep.circle_identity) {
      fail(ErrorCode::kHypothesisUnmet, "circle identity abar (x) abar = (x^n-1)/(x-1) fails");
    }
  }
  const int ta = rep.a.degree(), tb = rep.b.degree();
  auto to_fact_mask = [&](int m) {
    uint64_t r = 0;
    if (m & 1) r |= 1ULL << ix;
    if (m & 2) r |= 1ULL << ia;
    if (m & 4) r |= 1ULL << ib;
    return r;
  };
  std::set<int> covered;
  for (const Pattern& pat : patterns()) {
    if (std::string(pat.kind) != "any" && pat.kind != rep.n_kind) continue;
    const int fm0 = label_mask(pat.f), gm0 = label_mask(pat.g), hm0 = label_mask(pat.h);
    for (int fm = 0; fm < 8; ++fm) {
      for (int gm = 0; gm < 8; ++gm) {
        const int hm = 7 & ~fm & ~gm;
        if ((fm & gm) != 0) continue;
        if ((fm0 >= 0 && fm != fm0) || (gm0 >= 0 && gm != gm0) || (hm0 >= 0 && hm != hm0)) continue;
        TableRow row;
        row.n_kind = pat.kind;
        row.f = mask_label(fm);
        row.g = mask_label(gm);
        row.h = mask_label(hm);
        row.rank_formula = formula_text(pat.rank);
        row.ker_formula = formula_text(pat.ker);
        row.spec = CodeSpec::make(fact, 0, PolyP::constant(base, 1), PolyP::zero(base),
                                  fact->product(to_fact_mask(fm)), fact->product(to_fact_mask(hm)),
                                  fact->product(to_fact_mask(gm)));
        row.gamma = row.spec.h().degree();
        row.delta = row.spec.g().degree();
        row.rank_expected = pat.rank.eval(p, row.gamma, row.delta, ta, tb);
        row.ker_expected = pat.ker.eval(p, row.gamma, row.delta, ta, tb);
        row.oracle_run = row.gamma + row.delta <= opt.oracle_max_gamma_delta &&
                         fits_power(p, 2 * row.delta, cfg.pair_budget) &&
                         fits_power(p, row.delta, cfg.residue_budget);
        if (row.oracle_run) {
          const KernelResult k = kernel_compare(row.spec, cfg);
          const RankResult r = rank_compare(row.spec, cfg);
          row.ker = k.dim;
          row.rank = r.dim;
          row.ker_structural = *k.structural_dim;
          row.rank_structural = *r.structural_dim;
        } else {
          row.ker = row.ker_structural = kernel_structural(row.spec, cfg).dim;
          row.rank = row.rank_structural = rank_structural(row.spec, cfg).dim;
        }
        covered.insert(fm * 8 + gm);
        rep.rows.push_back(std::move(row));
      }
    }
  }
  rep.splits_covered = static_cast<int>(covered.size());
  return rep;
}

// ------------------------------------------------------------- existence

std::string TypeExistence::certificate() const {
  std::ostringstream os;
  if (!gate_passed) {
    os << "type violates 0 < delta + gamma <= beta + kappa, kappa <= min(alpha, gamma)";
    return os.str();
  }
  os << "a-divisors=" << a_count << " splits=" << triple_count
     << " degree-compatible=" << degree_candidates << " specs-typed=" << specs_checked;
  return os.str();
}

TypeExistence cyclic_type_exists(int p, int alpha, int beta, const TypeQuery& type,
                                 uint64_t b_cap) {
  TypeExistence out;
  const int g = type.gamma, d = type.delta;
  const int kmax = std::min(alpha, g);
  auto gate = [&](int k) { return d + g > 0 && d + g <= beta + k && k <= kmax && k >= 0; };
  if (type.kappa) {
    out.gate_passed = gate(*type.kappa);
  } else {
    out.gate_passed = false;
    for (int k = 0; k <= kmax; ++k) out.gate_passed = out.gate_passed || gate(k);
  }
  if (!out.gate_passed) return out;
  auto fact = factorization(p, beta);
  const PrimeBase& base = fact->base();
  std::vector<PolyP> as = alpha == 0 ? std::vector<PolyP>{PolyP::constant(base, 1)}
                                     : divisors_of_xn_minus_1(base, alpha);
  out.a_count = static_cast<int>(as.size());
  int triples = 1;
  for (int i = 0; i < fact->size(); ++i) triples *= 3;
  out.triple_count = triples;
  bool partial = false;
  for (const CodeSpec& s : enumerate_specs(fact, alpha, b_cap, &partial)) {
    const int da = alpha == 0 ? 0 : s.a().degree();
    const bool degree_ok = alpha - da + s.h().degree() == g && s.g().degree() == d;
    if (degree_ok && s.b().is_zero()) ++out.degree_candidates;
    ++out.specs_checked;
    const AdditiveCode c = AdditiveCode::of(s);
    if (c.gamma() == g && c.delta() == d && (!type.kappa || c.kappa() == *type.kappa)) {
      out.exists = true;
      if (!out.witness) out.witness = s;
    }
  }
  return out;
}

// ------------------------------------------------------------- pair grid

namespace {

int binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

std::set<std::pair<int, int>> theoretical_pairs(int p, int beta, int gamma, int delta, int kappa) {
  std::set<std::pair<int, int>> out;
  const int lin = gamma + 2 * delta;
  out.insert({lin, lin});
  const int room = beta - (gamma - kappa) - delta;
  for (int kb = p == 2 ? 2 : 1; kb <= delta; ++kb) {
    const int cap = p == 2 ? binom(kb, 2) : binom(kb, 2) + binom(kb + 2, 3);
    for (int rb = 1; rb <= std::min(room, cap); ++rb) out.insert({lin + rb, lin - kb});
  }
  return out;
}

bool PairGrid::achieved_in_box() const {
  for (const auto& [pr, s] : achieved) {
    if (!theoretical.count(pr)) return false;
  }
  return true;
}

std::string PairGrid::render(bool cyclic) const {
  const int lin = type.gamma + 2 * type.delta;
  int rmax = lin, kmin = lin;
  for (const auto& pr : theoretical) {
    rmax = std::max(rmax, pr.first);
    kmin = std::min(kmin, pr.second);
  }
  for (const auto& [pr, s] : achieved) {
    rmax = std::max(rmax, pr.first);
    kmin = std::min(kmin, pr.second);
  }
  std::ostringstream os;
  os << (cyclic ? "cyclic" : "general") << " (alpha=" << alpha << ", beta=" << beta
     << "; gamma=" << type.gamma << ", delta=" << type.delta << "; kappa="
     << (type.kappa ? std::to_string(*type.kappa) : std::string("*")) << ")\n";
  os << "k\\r";
  for (int r = lin; r <= rmax; ++r) os << " " << (r < 10 ? " " : "") << r;
  os << "\n";
  for (int k = lin; k >= kmin; --k) {
    os << (k < 10 ? "  " : " ") << k;
    for (int r = lin; r <= rmax; ++r) {
      const bool mark = cyclic ? achieved.count({r, k}) > 0 : theoretical.count({r, k}) > 0;
      os << "  " << (mark ? "•" : ".");
    }
    os << "\n";
  }
  return os.str();
}

PairGrid pair_grid(int p, int alpha, int beta, const TypeQuery& type, const RunConfig& cfg,
                   uint64_t b_cap) {
  PairGrid grid;
  grid.p = p;
  grid.alpha = alpha;
  grid.beta = beta;
  grid.type = type;
  std::vector<CodeSpec> typed;
  for (const CodeSpec& s : enumerate_code_specs(p, alpha, beta, b_cap, &grid.partial)) {
    const AdditiveCode c = AdditiveCode::of(s);
    if (c.gamma() == type.gamma && c.delta() == type.delta &&
        (!type.kappa || c.kappa() == *type.kappa)) {
      typed.push_back(s);
    }
  }
  grid.specs_of_type = static_cast<int>(typed.size());
  const Classification cl = classify_specs(typed, cfg);
  grid.partial = grid.partial || cl.partial;
  for (const ClassificationRecord& r : cl.records) grid.achieved.emplace(std::make_pair(r.rank, r.ker), r.spec);
  const int kmax = std::min(alpha, type.gamma);
  for (int k = 0; k <= kmax; ++k) {
    if (type.kappa && k != *type.kappa) continue;
    if (type.delta + type.gamma == 0 || type.delta + type.gamma > beta + k) continue;
    const auto t = theoretical_pairs(p, beta, type.gamma, type.delta, k);
    grid.theoretical.insert(t.begin(), t.end());
  }
  return grid;
}

}  // namespace addcyc
