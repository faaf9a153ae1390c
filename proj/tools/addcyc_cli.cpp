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

// addcyc: command-line frontend over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "addcyc.h"

using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Globals {
  int p = 3;
  std::string format;  // empty: per-command default
  uint64_t budget = 531441;
  uint64_t word_budget = 1ULL << 22;
  int workers = 1;
  uint64_t seed = 20260101;
  std::string out;
};

struct SpecFlags {
  std::string file;
  int alpha = 0, beta = 0;
  std::string a = "1", b = "0", f, h, g;
};

using ContextPtr = std::unique_ptr<adc_context, decltype(&adc_context_free)>;
using CodePtr = std::unique_ptr<adc_code, decltype(&adc_code_free)>;

int exit_code(adc_status s) {
  switch (s) {
    case ADC_OK: return kExitOk;
    case ADC_STRUCTURAL_MISMATCH: return 3;
    case ADC_BUDGET_EXCEEDED: return 4;
    case ADC_INPUT_ERROR: return kExitInput;
    default: return 5;
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json spec_json(const Globals& gl, const SpecFlags& sf) {
  if (!sf.file.empty()) return Json::parse(read_file(sf.file));
  if (sf.f.empty() || sf.h.empty() || sf.g.empty() || sf.beta <= 0) {
    throw std::invalid_argument("give --spec FILE or --beta, --f, --h, --g");
  }
  return {{"p", gl.p}, {"alpha", sf.alpha}, {"beta", sf.beta}, {"a", sf.a},
          {"b", sf.b}, {"f", sf.f},         {"h", sf.h},       {"g", sf.g}};
}

void add_spec_flags(CLI::App* cmd, SpecFlags& sf) {
  cmd->set_help_flag("--help", "print this help message and exit");
  cmd->add_option("--spec", sf.file, "CodeSpec JSON file");
  cmd->add_option("--alpha", sf.alpha, "length of the Z_p part");
  cmd->add_option("--beta", sf.beta, "length of the Z_{p^2} part");
  cmd->add_option("--a", sf.a, "X generator a(x)");
  cmd->add_option("--b", sf.b, "X part b(x) of the mixed generator");
  cmd->add_option("--f", sf.f, "f(x) with fhg = x^beta - 1");
  cmd->add_option("--h", sf.h, "h(x)");
  cmd->add_option("--g", sf.g, "g(x)");
}

ContextPtr make_context(const Globals& gl) {
  ContextPtr ctx(adc_context_new(), &adc_context_free);
  if (!ctx) throw std::runtime_error("out of memory");
  const Json cfg = {{"residueBudget", gl.budget},
                    {"wordBudget", gl.word_budget},
                    {"workers", gl.workers},
                    {"seed", gl.seed}};
  if (adc_configure(ctx.get(), cfg.dump().c_str()) != ADC_OK) {
    throw std::invalid_argument(adc_error(ctx.get()));
  }
  return ctx;
}

// Prints the error for a failed call; returns the exit code.
int report(adc_context* ctx, adc_status s) {
  if (s != ADC_OK) std::cerr << "addcyc: " << adc_error(ctx) << "\n";
  return exit_code(s);
}

std::string fmt_or(const Globals& gl, const char* dflt) {
  return gl.format.empty() ? dflt : gl.format;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string type_text(const Json& t) {
  std::ostringstream os;
  os << "(" << t["alpha"] << "," << t["beta"] << ";" << t["gamma"] << "," << t["delta"] << ";"
     << t["kappa"] << ")";
  return os.str();
}

std::string word_text(const Json& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w["x"].size(); ++i) os << (i ? " " : "") << w["x"][i];
  os << " | ";
  for (size_t i = 0; i < w["y"].size(); ++i) os << (i ? " " : "") << w["y"][i];
  os << ")";
  return os.str();
}

// ------------------------------------------------------------------ commands

int cmd_factor(const Globals& gl, int n) {
  ContextPtr ctx = make_context(gl);
  const adc_status s = adc_factor(ctx.get(), gl.p, n);
  if (s != ADC_OK) return report(ctx.get(), s);
  const Json j = Json::parse(adc_result(ctx.get()));
  Output out(gl.out);
  const std::string fmt = fmt_or(gl, "text");
  if (fmt == "json") {
    out.os() << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out.os() << "factor,degree,coset\n";
    for (const Json& f : j["factors"]) {
      std::string coset;
      for (const Json& e : f["coset"]) coset += (coset.empty() ? "" : " ") + e.dump();
      const std::string poly = f["factor"];
      out.os() << csv_escape(poly) << "," << f["coset"].size() << "," << coset << "\n";
    }
  } else {
    out.os() << "x^" << n << "-1 = ";
    for (const Json& f : j["factors"]) out.os() << "(" << f["factor"].get<std::string>() << ")";
    out.os() << "  over Z_" << gl.p * gl.p << "\n";
    for (const Json& f : j["factors"]) {
      out.os() << "  " << f["factor"].get<std::string>() << "   exponents {";
      std::string sep;
      for (const Json& e : f["coset"]) {
        out.os() << sep << e;
        sep = ",";
      }
      out.os() << "}\n";
    }
  }
  return kExitOk;
}

int with_code(const Globals& gl, const SpecFlags& sf,
              const std::function<int(adc_context*, adc_code*)>& fn) {
  ContextPtr ctx = make_context(gl);
  adc_code* raw = nullptr;
  const std::string spec = spec_json(gl, sf).dump();
  const adc_status s = adc_code_new(ctx.get(), spec.c_str(), &raw);
  if (s != ADC_OK) return report(ctx.get(), s);
  CodePtr code(raw, &adc_code_free);
  return fn(ctx.get(), code.get());
}

int cmd_info(const Globals& gl, const SpecFlags& sf) {
  return with_code(gl, sf, [&](adc_context* ctx, adc_code* code) {
    const adc_status s = adc_info(ctx, code);
    if (s != ADC_OK) return report(ctx, s);
    const Json j = Json::parse(adc_result(ctx));
    Output out(gl.out);
    if (fmt_or(gl, "json") == "json") {
      out.os() << j.dump(2) << "\n";
      return kExitOk;
    }
    const Json& tf = j["typeFormula"];
    const Json& tm = j["typeMatrix"];
    out.os() << "type (formula) " << type_text(tf) << "  kappa1=" << tf["kappa1"]
             << " kappa2=" << tf["kappa2"] << " delta1=" << tf["delta1"]
             << " delta2=" << tf["delta2"] << "\n";
    out.os() << "type (matrix)  " << type_text(tm) << "  kappa1=" << tm["kappa1"]
             << " kappa2=" << tm["kappa2"] << " delta1=" << tm["delta1"]
             << " delta2=" << tm["delta2"] << "\n";
    out.os() << "|C| = " << gl.p << "^" << j["logSize"] << "\n";
    out.os() << "separable: " << (j["separableBySize"].get<bool>() ? "yes" : "no") << "\n";
    const Json& lin = j["linearity"];
    out.os() << "gray image: " << (lin["linear"].get<bool>() ? "linear" : "nonlinear") << " ("
             << lin["mode"].get<std::string>() << ", " << lin["pairsScanned"] << " pairs)\n";
    if (!lin["witnessU"].is_null()) {
      out.os() << "  witness u = " << word_text(lin["witnessU"]) << "\n  witness v = "
               << word_text(lin["witnessV"]) << "\n  carry     = "
               << word_text(lin["witnessCarry"]) << " not in C\n";
    }
    return kExitOk;
  });
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    size_t used = 0;
    v.push_back(std::stoi(item, &used));
  }
  return v;
}

int cmd_gray(const Globals& gl, const std::string& xs, const std::string& ys) {
  ContextPtr ctx = make_context(gl);
  const Json w = {{"x", parse_ints(xs)}, {"y", parse_ints(ys)}};
  const adc_status s = adc_gray(ctx.get(), gl.p, w.dump().c_str());
  if (s != ADC_OK) return report(ctx.get(), s);
  const Json j = Json::parse(adc_result(ctx.get()));
  Output out(gl.out);
  if (fmt_or(gl, "text") == "json") {
    out.os() << j.dump(2) << "\n";
  } else {
    out.os() << j["gray"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_kernel_rank(const Globals& gl, const SpecFlags& sf, const std::string& method,
                    bool kernel) {
  return with_code(gl, sf, [&](adc_context* ctx, adc_code* code) {
    const adc_status s = kernel ? adc_kernel(ctx, code, method.c_str())
                                : adc_rank(ctx, code, method.c_str());
    if (s != ADC_OK && s != ADC_STRUCTURAL_MISMATCH) return report(ctx, s);
    const Json j = Json::parse(adc_result(ctx));
    Output out(gl.out);
    if (fmt_or(gl, "json") == "json") {
      out.os() << j.dump(2) << "\n";
    } else {
      const char* poly = kernel ? "kPoly" : "rPoly";
      out.os() << (kernel ? "ker" : "rank") << " = " << j["dim"] << "  method "
               << j["method"].get<std::string>();
      if (!j[poly].is_null()) {
        out.os() << "  " << (kernel ? "k'" : "r") << " = " << j[poly].get<std::string>();
      }
      out.os() << "  agreement " << (j["agreement"].get<bool>() ? "true" : "false") << "\n";
    }
    return report(ctx, s);
  });
}

int cmd_classify(const Globals& gl, int alpha, int beta, uint64_t b_cap) {
  ContextPtr ctx = make_context(gl);
  const adc_status s = adc_classify(ctx.get(), gl.p, alpha, beta, b_cap);
  if (s != ADC_OK) return report(ctx.get(), s);
  const Json j = Json::parse(adc_result(ctx.get()));
  Output out(gl.out);
  const std::string fmt = fmt_or(gl, "text");
  if (fmt == "json") {
    out.os() << j.dump(2) << "\n";
    return kExitOk;
  }
  if (fmt == "csv") {
    out.os() << "a,b,f,h,g,gamma,delta,kappa,rank,ker,linear,method\n";
    for (const Json& r : j["records"]) {
      const Json& sp = r["spec"];
      const Json& t = r["type"];
      out.os() << csv_escape(sp["a"]) << "," << csv_escape(sp["b"]) << ","
               << csv_escape(sp["f"]) << "," << csv_escape(sp["h"]) << ","
               << csv_escape(sp["g"]) << "," << t["gamma"] << "," << t["delta"] << ","
               << t["kappa"] << "," << r["rank"] << "," << r["ker"] << ","
               << (r["linear"].get<bool>() ? "true" : "false") << ","
               << r["kerMethod"].get<std::string>() << "\n";
    }
    return kExitOk;
  }
  out.os() << "p=" << gl.p << " alpha=" << alpha << " beta=" << beta << "  "
           << j["records"].size() << " codes" << (j["partial"].get<bool>() ? " (partial)" : "")
           << "\n";
  for (const Json& r : j["records"]) {
    const Json& sp = r["spec"];
    out.os() << type_text(r["type"]) << "  a=" << sp["a"].get<std::string>()
             << " b=" << sp["b"].get<std::string>() << " f=" << sp["f"].get<std::string>()
             << " h=" << sp["h"].get<std::string>() << " g=" << sp["g"].get<std::string>()
             << "  rank=" << r["rank"] << " ker=" << r["ker"]
             << (r["linear"].get<bool>() ? " linear" : "") << " [" << r["kerMethod"].get<std::string>()
             << (r["agreement"].get<bool>() ? "" : ", structural disagrees") << "]\n";
  }
  for (const Json& sk : j["skipped"]) out.os() << "skipped: " << sk.get<std::string>() << "\n";
  return kExitOk;
}

int cmd_table1(const Globals& gl, int n) {
  ContextPtr ctx = make_context(gl);
  const adc_status s = adc_table1(ctx.get(), gl.p, n);
  if (s != ADC_OK) return report(ctx.get(), s);
  Json j = Json::parse(adc_result(ctx.get()));
  Output out(gl.out);
  const std::string fmt = fmt_or(gl, "text");
  if (fmt == "json") {
    j.erase("text");
    out.os() << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    out.os() << "n_kind,f,g,h,gamma,delta,rank_formula,rank_expected,rank,ker_formula,"
                "ker_expected,ker,oracle,structural_agrees,match\n";
    for (const Json& r : j["rows"]) {
      out.os() << r["nKind"].get<std::string>() << "," << csv_escape(r["f"]) << ","
               << csv_escape(r["g"]) << "," << csv_escape(r["h"]) << "," << r["gamma"] << ","
               << r["delta"] << "," << csv_escape(r["rankFormula"]) << "," << r["rankExpected"]
               << "," << r["rank"] << "," << csv_escape(r["kerFormula"]) << ","
               << r["kerExpected"] << "," << r["ker"] << ","
               << (r["oracleRun"].get<bool>() ? "run" : "skipped") << ","
               << (r["agreement"].get<bool>() ? "true" : "false") << ","
               << (r["match"].get<bool>() ? "true" : "false") << "\n";
    }
  } else {
    out.os() << j["text"].get<std::string>();
  }
  return kExitOk;
}

int cmd_pairs(const Globals& gl, int alpha, int beta, const std::string& type, uint64_t b_cap) {
  ContextPtr ctx = make_context(gl);
  const adc_status s = adc_pairs(ctx.get(), gl.p, alpha, beta, type.c_str(), b_cap);
  if (s != ADC_OK) return report(ctx.get(), s);
  Json j = Json::parse(adc_result(ctx.get()));
  Output out(gl.out);
  if (fmt_or(gl, "text") == "json") {
    j.erase("textGeneral");
    j.erase("textCyclic");
    out.os() << j.dump(2) << "\n";
  } else {
    out.os() << j["textGeneral"].get<std::string>() << "\n" << j["textCyclic"].get<std::string>();
    out.os() << "codes of this type: " << j["specsOfType"]
             << (j["partial"].get<bool>() ? " (partial b sweep)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_exists(const Globals& gl, int alpha, int beta, const std::string& type, uint64_t b_cap) {
  ContextPtr ctx = make_context(gl);
  const adc_status s = adc_type_exists(ctx.get(), gl.p, alpha, beta, type.c_str(), b_cap);
  if (s != ADC_OK) return report(ctx.get(), s);
  const Json j = Json::parse(adc_result(ctx.get()));
  Output out(gl.out);
  if (fmt_or(gl, "text") == "json") {
    out.os() << j.dump(2) << "\n";
  } else {
    out.os() << (j["exists"].get<bool>() ? "exists" : "does not exist") << ": "
             << j["certificate"].get<std::string>() << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------ regress

struct CaseResult {
  std::string name;
  bool pass = true;
  bool error = false;
  std::string message;
  double seconds = 0;
};

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '&': o += "&amp;"; break;
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

void expect_eq(CaseResult& r, const std::string& what, const Json& want, const Json& got) {
  if (want == got) return;
  r.pass = false;
  r.message += what + ": expected " + want.dump() + ", got " + got.dump() + "; ";
}

CaseResult run_case(adc_context* ctx, const Json& c, int index) {
  CaseResult r;
  r.name = c.value("name", "case" + std::to_string(index));
  const Json expect = c.value("expect", Json::object());
  const std::string method = c.value("method", "both");
  auto call_failed = [&](adc_status s) {
    r.pass = false;
    r.error = true;
    r.message += std::string("status ") + std::to_string(exit_code(s)) + ": " + adc_error(ctx) + "; ";
  };
  if (c.contains("factor")) {
    const Json& f = c["factor"];
    const adc_status s = adc_factor(ctx, f.at("p").get<int>(), f.at("n").get<int>());
    if (s != ADC_OK) {
      call_failed(s);
      return r;
    }
    const Json j = Json::parse(adc_result(ctx));
    std::vector<std::string> got;
    for (const Json& e : j["factors"]) got.push_back(e["factor"]);
    std::vector<std::string> want = expect.at("factors").get<std::vector<std::string>>();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    expect_eq(r, "factors", want, got);
    return r;
  }
  adc_code* raw = nullptr;
  adc_status s = adc_code_new(ctx, c.at("spec").dump().c_str(), &raw);
  if (s != ADC_OK) {
    call_failed(s);
    return r;
  }
  CodePtr code(raw, &adc_code_free);
  const bool want_info = expect.contains("gamma") || expect.contains("delta") ||
                         expect.contains("kappa") || expect.contains("linear");
  if (want_info) {
    s = adc_info(ctx, code.get());
    if (s != ADC_OK) {
      call_failed(s);
      return r;
    }
    const Json j = Json::parse(adc_result(ctx));
    for (const char* k : {"gamma", "delta", "kappa"}) {
      if (expect.contains(k)) expect_eq(r, k, expect[k], j["typeMatrix"][k]);
    }
    if (expect.contains("linear")) {
      expect_eq(r, "linear", expect["linear"], j["linearity"]["linear"]);
      if (!r.pass && !j["linearity"]["witnessU"].is_null()) {
        r.message += "witness u=" + word_text(j["linearity"]["witnessU"]) +
                     " v=" + word_text(j["linearity"]["witnessV"]) + "; ";
      }
    }
  }
  if (expect.contains("ker")) {
    s = adc_kernel(ctx, code.get(), method.c_str());
    if (s != ADC_OK) {
      call_failed(s);
    } else {
      expect_eq(r, "ker", expect["ker"], Json::parse(adc_result(ctx))["dim"]);
    }
  }
  if (expect.contains("rank")) {
    s = adc_rank(ctx, code.get(), method.c_str());
    if (s != ADC_OK) {
      call_failed(s);
    } else {
      expect_eq(r, "rank", expect["rank"], Json::parse(adc_result(ctx))["dim"]);
    }
  }
  return r;
}

int cmd_regress(const Globals& gl, const std::string& corpus, const std::string& junit) {
  Json doc;
  try {
    doc = Json::parse(read_file(corpus));
  } catch (const std::exception& e) {
    std::cerr << "addcyc: malformed corpus: " << e.what() << "\n";
    return kExitInput;
  }
  const Json cases = doc.is_array() ? doc : doc.value("cases", Json());
  if (!cases.is_array()) {
    std::cerr << "addcyc: malformed corpus: expected an array of cases\n";
    return kExitInput;
  }
  for (const Json& c : cases) {
    if (!c.is_object() || (!c.contains("spec") && !c.contains("factor")) ||
        !c.contains("expect") || !c["expect"].is_object()) {
      std::cerr << "addcyc: malformed corpus: each case needs \"spec\" or \"factor\" and "
                   "\"expect\"\n";
      return kExitInput;
    }
  }
  if (cases.empty()) std::cerr << "addcyc: warning: empty corpus\n";
  ContextPtr ctx = make_context(gl);
  std::vector<CaseResult> results;
  Output out(gl.out);
  int failed = 0, errors = 0;
  double total = 0;
  for (size_t i = 0; i < cases.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    CaseResult r = run_case(ctx.get(), cases[i], static_cast<int>(i));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += r.seconds;
    if (!r.pass) ++(r.error ? errors : failed);
    out.os() << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass) out.os() << "  " << r.message;
    out.os() << "\n";
    results.push_back(std::move(r));
  }
  out.os() << results.size() - failed - errors << "/" << results.size() << " passed\n";
  if (!junit.empty()) {
    std::ofstream x(junit);
    if (!x) {
      std::cerr << "addcyc: cannot write " << junit << "\n";
      return kExitInput;
    }
    char tbuf[64];
    std::snprintf(tbuf, sizeof tbuf, "%.3f", total);
    x << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<testsuites>\n  <testsuite name=\"regress\" "
      << "tests=\"" << results.size() << "\" failures=\"" << failed << "\" errors=\"" << errors
      << "\" time=\"" << tbuf << "\">\n";
    for (const CaseResult& r : results) {
      std::snprintf(tbuf, sizeof tbuf, "%.3f", r.seconds);
      x << "    <testcase classname=\"regress\" name=\"" << xml_escape(r.name) << "\" time=\""
        << tbuf << "\"";
      if (r.pass) {
        x << "/>\n";
      } else {
        const char* tag = r.error ? "error" : "failure";
        x << ">\n      <" << tag << " message=\"" << xml_escape(r.message) << "\"/>\n"
          << "    </testcase>\n";
      }
    }
    x << "  </testsuite>\n</testsuites>\n";
  }
  return failed + errors == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z_pZ_{p^2}-additive cyclic codes: Gray images, kernels and ranks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--p", gl.p, "prime p")->check(CLI::PositiveNumber);
  app.add_option("--format", gl.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--budget", gl.budget, "max distinct residues in exhaustive scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--word-budget", gl.word_budget, "max codewords in full enumerations")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", gl.workers, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--seed", gl.seed, "seed for randomized checks");
  app.add_option("--out", gl.out, "write output to FILE");
  app.set_version_flag("--version", std::string(adc_version()));

  int n = 0;
  auto* factor = app.add_subcommand("factor", "factor x^n - 1 over Z_{p^2}");
  factor->add_option("--n", n, "length")->required();

  SpecFlags sf;
  auto* info = app.add_subcommand("info", "type, separability and linearity of a code");
  add_spec_flags(info, sf);

  std::string xs, ys;
  auto* gray = app.add_subcommand("gray", "Gray image of a word");
  gray->add_option("--x", xs, "Z_p part, comma separated");
  gray->add_option("--y", ys, "Z_{p^2} part, comma separated");

  std::string method = "both";
  auto* kernel = app.add_subcommand("kernel", "kernel dimension and K(C)");
  add_spec_flags(kernel, sf);
  kernel->add_option("--method", method)->check(CLI::IsMember({"oracle", "structural", "both"}));
  auto* rank = app.add_subcommand("rank", "rank and R(C)");
  add_spec_flags(rank, sf);
  rank->add_option("--method", method)->check(CLI::IsMember({"oracle", "structural", "both"}));

  int alpha = 0, beta = 0;
  uint64_t b_cap = 81;
  std::string type;
  auto* classify = app.add_subcommand("classify", "rank and kernel of every cyclic code");
  classify->add_option("--alpha", alpha)->required();
  classify->add_option("--beta", beta)->required();
  classify->add_option("--b-cap", b_cap, "sweep every b when p^deg(a) is at most this");

  auto* table1 = app.add_subcommand("table1", "rank/kernel table for n = q or q^2");
  table1->add_option("--n", n, "length")->required();

  auto* pairs = app.add_subcommand("pairs", "achieved and admissible (rank, ker) pairs");
  pairs->add_option("--alpha", alpha)->required();
  pairs->add_option("--beta", beta)->required();
  pairs->add_option("--type", type, "gamma,delta,kappa (kappa may be *)")->required();
  pairs->add_option("--b-cap", b_cap);

  auto* exists = app.add_subcommand("exists", "is there a cyclic code of the given type");
  exists->add_option("--alpha", alpha)->required();
  exists->add_option("--beta", beta)->required();
  exists->add_option("--type", type, "gamma,delta,kappa (kappa may be *)")->required();
  exists->add_option("--b-cap", b_cap);

  std::string corpus, junit;
  auto* regress = app.add_subcommand("regress", "run a regression corpus");
  regress->add_option("corpus", corpus, "corpus JSON")->required();
  regress->add_option("--junit", junit, "write a JUnit XML report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*factor) return cmd_factor(gl, n);
    if (*info) return cmd_info(gl, sf);
    if (*gray) return cmd_gray(gl, xs, ys);
    if (*kernel) return cmd_kernel_rank(gl, sf, method, true);
    if (*rank) return cmd_kernel_rank(gl, sf, method, false);
    if (*classify) return cmd_classify(gl, alpha, beta, b_cap);
    if (*table1) return cmd_table1(gl, n);
    if (*pairs) return cmd_pairs(gl, alpha, beta, type, b_cap);
    if (*exists) return cmd_exists(gl, alpha, beta, type, b_cap);
    if (*regress) return cmd_regress(gl, corpus, junit);
  } catch (const std::exception& e) {
    std::cerr << "addcyc: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
