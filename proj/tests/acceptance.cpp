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

// End-to-end acceptance checks, one PASS/FAIL line each.
// Usage: acceptance <addcyc_cli> <property_tests>
//
// Checks listed in kKnownFailures reproduce published values that the
// exhaustive oracle contradicts; they print FAIL with the observed values
// and do not affect the exit status. Any other failure does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "oracles.hpp"

namespace addcyc {
namespace {

using Pairs = std::set<std::pair<int, int>>;

const std::set<int> kKnownFailures = {2, 4, 6};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << what << "; ";
    }
  }
};

std::string run_command(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  *status = pclose(pipe);
  return out;
}

std::set<std::string> canonical_factors(const PrimeBase& b, const std::vector<std::string>& fs) {
  std::set<std::string> out;
  for (const std::string& f : fs) out.insert(parse_poly<Ring::kZp2>(b, f).str());
  return out;
}

std::string pairs_text(const Pairs& ps) {
  std::string s = "{";
  for (const auto& [r, k] : ps) s += "(" + std::to_string(r) + "," + std::to_string(k) + ")";
  return s + "}";
}

// 1. Factorizations of x^13 - 1 and x^11 - 1 over Z_9 through the CLI.
void factorization(Outcome& o, const std::string& cli) {
  const PrimeBase b(3);
  const std::vector<std::pair<int, std::vector<std::string>>> cases = {
      {13, {"x+8", "x^3+6x^2+2x+8", "x^3+7x^2+3x+8", "x^3+4x^2+7x+8", "x^3+2x^2+5x+8"}},
      {11, {"x-1", "x^5+3x^4-x^3+x^2+2x-1", "x^5+7x^4-x^3+x^2+6x-1"}},
  };
  for (const auto& [n, want] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    int status = 0;
    const std::string out =
        run_command(cli + " --format json factor --p 3 --n " + std::to_string(n), &status);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(status == 0, "n=" + std::to_string(n) + " exit status " + std::to_string(status));
    if (status != 0) continue;
    std::vector<std::string> got;
    const Json j = Json::parse(out);
    for (const Json& f : j["factors"]) got.push_back(f["factor"]);
    o.require(canonical_factors(b, got) == canonical_factors(b, want),
              "n=" + std::to_string(n) + " factors differ");
    o.require(secs < 1.0, "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
    o.detail << "n=" << n << ": " << got.size() << " factors; ";
  }
}

// 2. The length-11 example codes and their twins.
void example_codes(Outcome& o) {
  for (const char* b : {"0", "1"}) {
    for (bool twin : {false, true}) {
      const CodeSpec s = fixtures::example11(b, twin);
      const RankResult r = rank_compare(s);
      const KernelResult k = kernel_compare(s);
      const int want_rank = std::string(b) == "0" ? 17 : 16;
      o.detail << "b=" << b << (twin ? " twin" : "") << ": (" << r.dim << "," << k.dim << ")";
      o.detail << (r.agreement && k.agreement ? " agree" : " disagree") << "; ";
      o.require(r.agreement && k.agreement, "structural disagrees");
      o.require(r.dim == want_rank && k.dim == 7,
                "expected (" + std::to_string(want_rank) + ",7)");
    }
  }
}

// 3. No cyclic code of type (2,13;2,4;1).
void nonexistence(Outcome& o) {
  const TypeExistence e = cyclic_type_exists(3, 2, 13, TypeQuery{2, 4, 1});
  o.require(e.gate_passed, "gate rejected");
  o.require(!e.exists, "a code of this type was found");
  o.require(e.a_count == 4 && e.triple_count == 243, "incomplete search");
  o.detail << e.certificate() << "; ";
}

// 4. Rank/kernel table at p = 3, n = 11.
void table_q(Outcome& o) {
  const TableReport t = table_q_case(3, 11);
  o.require(t.circle_identity, "circle identity fails");
  int oracle_rows = 0, skipped = 0;
  for (const TableRow& r : t.rows) {
    (r.oracle_run ? oracle_rows : skipped)++;
    if (r.gamma + r.delta <= 8) o.require(r.oracle_run, "oracle skipped on a small row");
    if (!r.rank_match() || !r.ker_match()) {
      o.require(false, "f=" + r.f + " g=" + r.g + " h=" + r.h + ": (" + std::to_string(r.rank) +
                           "," + std::to_string(r.ker) + ") vs formula (" +
                           std::to_string(r.rank_expected) + "," +
                           std::to_string(r.ker_expected) + ")");
    }
  }
  o.detail << t.rows.size() << " rows, " << oracle_rows << " oracle, " << skipped
           << " structural only; ";
}

// 5. The pure quaternary code with f = x - 1, h = 1 at n = 5.
void q_code(Outcome& o) {
  const CodeSpec s = fixtures::q5();
  const CodeType t = AdditiveCode::of(s).type();
  const RankResult r = rank_compare(s);
  const KernelResult k = kernel_compare(s);
  o.require(r.dim == t.gamma + 2 * t.delta + 1 && r.dim == 9, "rank " + std::to_string(r.dim));
  const int deg_k = k.k_poly ? k.k_poly->degree() : -1;
  o.require(k.dim == t.gamma + 2 * t.delta - deg_k && k.dim == 4, "ker " + std::to_string(k.dim));
  o.require(k.agreement && r.agreement, "structural disagrees");
  o.detail << "rank " << r.dim << ", ker " << k.dim << " (gamma+2delta-deg k = "
           << t.gamma + 2 * t.delta - deg_k << "; gamma+delta = " << t.gamma + t.delta << "); ";
}

// 6. Rank/kernel pairs for the family beta = 2 delta + 1, alpha = gamma <= delta - 1
// at beta = 11 (delta = 5 is the order of 3 mod 11).
void pair_family(Outcome& o) {
  constexpr int kBeta = 11, kDelta = (kBeta - 1) / 2;
  int members = 0;
  for (int alpha = 1; alpha <= kDelta - 1; ++alpha) {
    const Classification c = classify(3, alpha, kBeta);
    o.require(!c.partial, "partial classification at alpha=" + std::to_string(alpha));
    for (const ClassificationRecord& r : c.records) {
      const CodeType& t = r.type;
      if (t.delta != kDelta || t.gamma != alpha) continue;
      ++members;
      const int base = t.gamma + 3 * t.delta;
      const bool ok = r.ker == t.gamma + t.delta && r.rank >= base - 1 && r.rank <= base + 1;
      o.require(ok, r.spec.key() + " gives (" + std::to_string(r.rank) + "," +
                        std::to_string(r.ker) + ")");
    }
  }
  o.detail << members << " codes in the family; ";

  Pairs general_expect{{12, 12}, {13, 11}};
  for (int k = 7; k <= 10; ++k) {
    for (int r = 13; r <= 17; ++r) general_expect.insert({r, k});
  }
  const Pairs general = theoretical_pairs(3, 11, 2, 5, 1);
  o.require(general == general_expect, "general grid " + pairs_text(general));

  const PairGrid g = pair_grid(3, 2, 11, TypeQuery{2, 5, 1});
  Pairs cyclic;
  for (const auto& [rk, spec] : g.achieved) cyclic.insert(rk);
  o.require(g.achieved_in_box(), "cyclic pair outside the general grid");
  o.require(cyclic == Pairs{{16, 7}, {17, 7}}, "expected cyclic grid {(16,7)(17,7)}");
  o.detail << "cyclic grid " << pairs_text(cyclic) << " over " << g.specs_of_type << " codes; ";
}

// 7. Randomized invariants, run as a separate binary.
void properties(Outcome& o, const std::string& binary) {
  int status = 0;
  const std::string out = run_command(binary + " --gtest_brief=1 2>&1", &status);
  o.require(status == 0, "property suite failed:\n" + out);
  o.detail << "4 configurations x 10^4 cases; ";
}

// 8. Circle products against a splitting-field computation.
void circle_products(Outcome& o) {
  int checked = 0;
  for (int p : {3, 5}) {
    const PrimeBase b(p);
    for (int n : {5, 7, 11, 13}) {
      if (n % p == 0) continue;  // x^n - 1 has repeated roots
      const XnFactorization f = factor_xn_minus_1(b, n);
      const oracle::Splitting field(p, n);
      for (const std::vector<int>& d : field.all_divisors()) {
        const PolyP c(b, d);
        for (int j : {2, 3}) {
          ++checked;
          o.require(circle_product(c, j, f) == PolyP(b, field.circle(d, j)),
                    "p=" + std::to_string(p) + " n=" + std::to_string(n) + " c=" + c.str());
        }
      }
    }
  }
  const PrimeBase b3(3);
  const XnFactorization f11 = factor_xn_minus_1(b3, 11);
  const PolyP quotient = parse_poly<Ring::kZp>(b3, "x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1");
  for (const char* fi : {fixtures::kF1, fixtures::kF2}) {
    const PolyP fb = reduce_mod_p(parse_poly<Ring::kZp2>(b3, fi));
    o.require(circle_product(fb, 2, f11) == quotient, std::string("self product of ") + fi);
  }
  o.detail << checked << " products; ";
}

// 9. Binary case: cyclic grid of type (2,7;2,3;*).
void binary_grid(Outcome& o) {
  const PairGrid g = pair_grid(2, 2, 7, TypeQuery{2, 3, std::nullopt});
  Pairs cyclic;
  for (const auto& [rk, spec] : g.achieved) cyclic.insert(rk);
  o.require(cyclic == Pairs{{11, 5}}, "cyclic grid " + pairs_text(cyclic));
  o.require(g.theoretical == Pairs{{8, 8}, {9, 6}, {9, 5}, {10, 5}, {11, 5}},
            "general grid " + pairs_text(g.theoretical));
  o.detail << "cyclic grid " << pairs_text(cyclic) << "; ";
}

}  // namespace
}  // namespace addcyc

int main(int argc, char** argv) {
  using namespace addcyc;
  if (argc < 3) {
    std::cerr << "usage: acceptance <addcyc_cli> <property_tests>\n";
    return 2;
  }
  const std::string cli = argv[1], props = argv[2];
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> checks = {
      {"factorization of x^n - 1", [&](Outcome& o) { factorization(o, cli); }},
      {"length-11 example codes", example_codes},
      {"nonexistence of type (2,13;2,4;1)", nonexistence},
      {"rank/kernel table at n = 11", table_q},
      {"pure quaternary code at n = 5", q_code},
      {"rank/kernel pairs at beta = 11", pair_family},
      {"property suite", [&](Outcome& o) { properties(o, props); }},
      {"circle products", circle_products},
      {"binary pair grid", binary_grid},
  };
  int unexpected = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      checks[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = kKnownFailures.count(id) > 0;
    if (!o.pass && !known) ++unexpected;
    std::printf("%s %d %s [%.1fs]%s: %s\n", o.pass ? "PASS" : "FAIL", id, checks[i].first.c_str(),
                secs, !o.pass && known ? " (known, oracle contradicts the published value)" : "",
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
