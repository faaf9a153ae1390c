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

#include "json_io.hpp"

#include <sstream>

namespace addcyc {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("field \"") + key + "\": " + e.what());
  }
}

template <Ring R>
Poly<R> poly_field(const PrimeBase& base, const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (v.is_string()) return parse_poly<R>(base, v.get<std::string>());
  if (v.is_number_integer()) return Poly<R>(base, {v.get<int>()});
  if (v.is_array()) {
    std::vector<int> c;
    for (const Json& e : v) {
      if (!e.is_number_integer()) fail(ErrorCode::kParse, std::string("field \"") + key + "\"");
      c.push_back(e.get<int>());
    }
    return Poly<R>(base, std::move(c));
  }
  fail(ErrorCode::kParse, std::string("field \"") + key + "\" is not a polynomial");
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> opt_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

const char* scan_mode_name(ScanMode m) {
  switch (m) {
    case ScanMode::kExhaustive: return "exhaustive";
    case ScanMode::kReduced: return "reduced";
    case ScanMode::kAuto: return "auto";
  }
  return "auto";
}

ScanMode parse_scan_mode(const std::string& s) {
  if (s == "exhaustive") return ScanMode::kExhaustive;
  if (s == "reduced") return ScanMode::kReduced;
  if (s == "auto") return ScanMode::kAuto;
  fail(ErrorCode::kParse, "unknown scan mode " + s);
}

Json opt_spec(const std::optional<CodeSpec>& s) { return s ? to_json(*s) : Json(nullptr); }

std::optional<CodeSpec> opt_spec_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return spec_from_json(j.at(key));
}

Json opt_word(const std::optional<MixedWord>& w) { return w ? to_json(*w) : Json(nullptr); }

std::optional<MixedWord> opt_word_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return word_from_json(j.at(key));
}

}  // namespace

CodeInfo code_info(const CodeSpec& spec, const RunConfig& cfg) {
  CodeInfo c;
  c.spec = spec;
  c.type = compute_type(spec);
  c.separable = is_separable(spec);
  const AdditiveCode code = AdditiveCode::of(spec);
  c.linearity = gray_image_linearity(code, ScanMode::kAuto, cfg);
  c.log_size = code.log_size();
  return c;
}

Json to_json(const CodeSpec& s) {
  return {{"p", s.p()},          {"alpha", s.alpha()}, {"beta", s.beta()},
          {"a", s.a().str()},    {"b", s.b().str()},   {"f", s.f().str()},
          {"h", s.h().str()},    {"g", s.g().str()}};
}

CodeSpec spec_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "code spec must be a JSON object");
  const int p = field<int>(j, "p");
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  const PrimeBase base(p);
  const int alpha = j.contains("alpha") ? field<int>(j, "alpha") : 0;
  const int beta = field<int>(j, "beta");
  const PolyP a = j.contains("a") ? poly_field<Ring::kZp>(base, j, "a")
                                  : PolyP::constant(base, 1);
  const PolyP b = j.contains("b") ? poly_field<Ring::kZp>(base, j, "b") : PolyP::zero(base);
  return CodeSpec::make(base, alpha, beta, a, b, poly_field<Ring::kZp2>(base, j, "f"),
                        poly_field<Ring::kZp2>(base, j, "h"),
                        poly_field<Ring::kZp2>(base, j, "g"));
}

Json to_json(const CodeType& t) {
  return {{"alpha", t.alpha},   {"beta", t.beta},     {"gamma", t.gamma},
          {"delta", t.delta},   {"kappa", t.kappa},   {"kappa1", t.kappa1},
          {"kappa2", t.kappa2}, {"delta1", t.delta1}, {"delta2", t.delta2}};
}

CodeType type_from_json(const Json& j) {
  CodeType t;
  t.alpha = field<int>(j, "alpha");
  t.beta = field<int>(j, "beta");
  t.gamma = field<int>(j, "gamma");
  t.delta = field<int>(j, "delta");
  t.kappa = field<int>(j, "kappa");
  t.kappa1 = field<int>(j, "kappa1");
  t.kappa2 = field<int>(j, "kappa2");
  t.delta1 = field<int>(j, "delta1");
  t.delta2 = field<int>(j, "delta2");
  return t;
}

Json to_json(const XnFactorization& f) {
  Json factors = Json::array();
  for (const XnFactor& x : f.factors()) {
    factors.push_back({{"factor", x.lifted.str()}, {"coset", x.coset}});
  }
  return {{"p", f.base().p()}, {"n", f.n()}, {"factors", factors}};
}

XnFactorization factorization_from_json(const Json& j) {
  const PrimeBase base(field<int>(j, "p"));
  std::vector<XnFactor> fs;
  for (const Json& e : field<Json>(j, "factors")) {
    fs.push_back({poly_field<Ring::kZp2>(base, e, "factor"), field<std::vector<int>>(e, "coset")});
  }
  return XnFactorization(base, field<int>(j, "n"), std::move(fs));
}

Json to_json(const MixedWord& w) {
  std::vector<int> x(w.x.begin(), w.x.end()), y(w.y.begin(), w.y.end());
  return {{"x", x}, {"y", y}};
}

MixedWord word_from_json(const Json& j) {
  MixedWord w;
  for (int v : field<std::vector<int>>(j, "x")) {
    if (v < 0 || v > 255) fail(ErrorCode::kOutOfRange, "word entry " + std::to_string(v));
    w.x.push_back(static_cast<uint8_t>(v));
  }
  for (int v : field<std::vector<int>>(j, "y")) {
    if (v < 0 || v > 255) fail(ErrorCode::kOutOfRange, "word entry " + std::to_string(v));
    w.y.push_back(static_cast<uint8_t>(v));
  }
  return w;
}

Json to_json(const LinearityResult& r) {
  return {{"linear", r.linear},
          {"mode", scan_mode_name(r.mode)},
          {"pairsScanned", r.pairs_scanned},
          {"witnessU", opt_word(r.witness_u)},
          {"witnessV", opt_word(r.witness_v)},
          {"witnessCarry", opt_word(r.witness_carry)}};
}

LinearityResult linearity_from_json(const Json& j) {
  LinearityResult r;
  r.linear = field<bool>(j, "linear");
  r.mode = parse_scan_mode(field<std::string>(j, "mode"));
  r.pairs_scanned = field<uint64_t>(j, "pairsScanned");
  r.witness_u = opt_word_field(j, "witnessU");
  r.witness_v = opt_word_field(j, "witnessV");
  r.witness_carry = opt_word_field(j, "witnessCarry");
  return r;
}

Json to_json(const CodeInfo& c) {
  return {{"spec", to_json(c.spec)},
          {"typeFormula", to_json(c.type.formula)},
          {"typeMatrix", to_json(c.type.matrix)},
          {"typesAgree", c.type.agree()},
          {"separableBySize", c.separable.by_size},
          {"separableByType", c.separable.by_type},
          {"linearity", to_json(c.linearity)},
          {"logSize", c.log_size}};
}

CodeInfo info_from_json(const Json& j) {
  CodeInfo c;
  c.spec = spec_from_json(field<Json>(j, "spec"));
  c.type.formula = type_from_json(field<Json>(j, "typeFormula"));
  c.type.matrix = type_from_json(field<Json>(j, "typeMatrix"));
  c.separable.by_size = field<bool>(j, "separableBySize");
  c.separable.by_type = field<bool>(j, "separableByType");
  c.linearity = linearity_from_json(field<Json>(j, "linearity"));
  c.log_size = field<int>(j, "logSize");
  return c;
}

Json to_json(const KernelResult& r) {
  Json divs = Json::array();
  for (const PolyP2& k : r.minimal_divisors) divs.push_back(k.str());
  return {{"dim", r.dim},
          {"method", method_name(r.method)},
          {"agreement", r.agreement},
          {"oracleDim", opt(r.oracle_dim)},
          {"structuralDim", opt(r.structural_dim)},
          {"structuralSpec", opt_spec(r.spec)},
          {"kPoly", r.k_poly ? Json(r.k_poly->str()) : Json(nullptr)},
          {"minimalDivisors", divs}};
}

KernelResult kernel_from_json(const Json& j) {
  KernelResult r;
  r.dim = field<int>(j, "dim");
  r.method = parse_method(field<std::string>(j, "method"));
  r.agreement = field<bool>(j, "agreement");
  r.oracle_dim = opt_field<int>(j, "oracleDim");
  r.structural_dim = opt_field<int>(j, "structuralDim");
  r.spec = opt_spec_field(j, "structuralSpec");
  if (r.spec) {
    const PrimeBase& base = r.spec->base();
    if (!j.at("kPoly").is_null()) r.k_poly = poly_field<Ring::kZp2>(base, j, "kPoly");
    for (const Json& e : field<Json>(j, "minimalDivisors")) {
      r.minimal_divisors.push_back(parse_poly<Ring::kZp2>(base, e.get<std::string>()));
    }
  }
  return r;
}

Json to_json(const RankResult& r) {
  return {{"dim", r.dim},
          {"method", method_name(r.method)},
          {"agreement", r.agreement},
          {"oracleDim", opt(r.oracle_dim)},
          {"structuralDim", opt(r.structural_dim)},
          {"fullSpanDim", opt(r.full_span_dim)},
          {"structuralSpec", opt_spec(r.spec)},
          {"rPoly", r.r_poly ? Json(r.r_poly->str()) : Json(nullptr)}};
}

RankResult rank_from_json(const Json& j) {
  RankResult r;
  r.dim = field<int>(j, "dim");
  r.method = parse_method(field<std::string>(j, "method"));
  r.agreement = field<bool>(j, "agreement");
  r.oracle_dim = opt_field<int>(j, "oracleDim");
  r.structural_dim = opt_field<int>(j, "structuralDim");
  r.full_span_dim = opt_field<int>(j, "fullSpanDim");
  r.spec = opt_spec_field(j, "structuralSpec");
  if (r.spec && !j.at("rPoly").is_null()) {
    r.r_poly = poly_field<Ring::kZp2>(r.spec->base(), j, "rPoly");
  }
  return r;
}

Json to_json(const ClassificationRecord& r) {
  return {{"spec", to_json(r.spec)},
          {"type", to_json(r.type)},
          {"rank", r.rank},
          {"ker", r.ker},
          {"linear", r.linear},
          {"rankMethod", r.rank_method},
          {"kerMethod", r.ker_method},
          {"rankStructural", opt(r.rank_structural)},
          {"kerStructural", opt(r.ker_structural)},
          {"agreement", r.agreement()}};
}

ClassificationRecord record_from_json(const Json& j) {
  ClassificationRecord r;
  r.spec = spec_from_json(field<Json>(j, "spec"));
  r.type = type_from_json(field<Json>(j, "type"));
  r.rank = field<int>(j, "rank");
  r.ker = field<int>(j, "ker");
  r.linear = field<bool>(j, "linear");
  r.rank_method = field<std::string>(j, "rankMethod");
  r.ker_method = field<std::string>(j, "kerMethod");
  r.rank_structural = opt_field<int>(j, "rankStructural");
  r.ker_structural = opt_field<int>(j, "kerStructural");
  return r;
}

Json to_json(const Classification& c) {
  Json recs = Json::array();
  for (const ClassificationRecord& r : c.records) recs.push_back(to_json(r));
  return {{"records", recs}, {"partial", c.partial}, {"skipped", c.skipped}};
}

Classification classification_from_json(const Json& j) {
  Classification c;
  for (const Json& r : field<Json>(j, "records")) c.records.push_back(record_from_json(r));
  c.partial = field<bool>(j, "partial");
  c.skipped = field<std::vector<std::string>>(j, "skipped");
  return c;
}

Json to_json(const TableReport& t) {
  Json rows = Json::array();
  for (const TableRow& r : t.rows) {
    rows.push_back({{"nKind", r.n_kind},
                    {"f", r.f},
                    {"g", r.g},
                    {"h", r.h},
                    {"rankFormula", r.rank_formula},
                    {"kerFormula", r.ker_formula},
                    {"spec", to_json(r.spec)},
                    {"gamma", r.gamma},
                    {"delta", r.delta},
                    {"rankExpected", r.rank_expected},
                    {"kerExpected", r.ker_expected},
                    {"rank", r.rank},
                    {"ker", r.ker},
                    {"rankStructural", r.rank_structural},
                    {"kerStructural", r.ker_structural},
                    {"oracleRun", r.oracle_run},
                    {"match", r.rank_match() && r.ker_match()},
                    {"agreement", r.agreement()}});
  }
  return {{"p", t.p},
          {"n", t.n},
          {"nKind", t.n_kind},
          {"a", t.a.str()},
          {"b", t.b.str()},
          {"circleIdentity", t.circle_identity},
          {"splitsCovered", t.splits_covered},
          {"allMatch", t.all_match()},
          {"rows", rows}};
}

TableReport table_from_json(const Json& j) {
  TableReport t;
  t.p = field<int>(j, "p");
  t.n = field<int>(j, "n");
  t.n_kind = field<std::string>(j, "nKind");
  const PrimeBase base(t.p);
  t.a = poly_field<Ring::kZp2>(base, j, "a");
  t.b = poly_field<Ring::kZp2>(base, j, "b");
  t.circle_identity = field<bool>(j, "circleIdentity");
  t.splits_covered = field<int>(j, "splitsCovered");
  for (const Json& e : field<Json>(j, "rows")) {
    TableRow r;
    r.n_kind = field<std::string>(e, "nKind");
    r.f = field<std::string>(e, "f");
    r.g = field<std::string>(e, "g");
    r.h = field<std::string>(e, "h");
    r.rank_formula = field<std::string>(e, "rankFormula");
    r.ker_formula = field<std::string>(e, "kerFormula");
    r.spec = spec_from_json(field<Json>(e, "spec"));
    r.gamma = field<int>(e, "gamma");
    r.delta = field<int>(e, "delta");
    r.rank_expected = field<int>(e, "rankExpected");
    r.ker_expected = field<int>(e, "kerExpected");
    r.rank = field<int>(e, "rank");
    r.ker = field<int>(e, "ker");
    r.rank_structural = field<int>(e, "rankStructural");
    r.ker_structural = field<int>(e, "kerStructural");
    r.oracle_run = field<bool>(e, "oracleRun");
    t.rows.push_back(std::move(r));
  }
  return t;
}

Json to_json(const TypeExistence& e) {
  return {{"exists", e.exists},
          {"gatePassed", e.gate_passed},
          {"witness", opt_spec(e.witness)},
          {"aCount", e.a_count},
          {"tripleCount", e.triple_count},
          {"degreeCandidates", e.degree_candidates},
          {"specsChecked", e.specs_checked},
          {"certificate", e.certificate()}};
}

TypeExistence existence_from_json(const Json& j) {
  TypeExistence e;
  e.exists = field<bool>(j, "exists");
  e.gate_passed = field<bool>(j, "gatePassed");
  e.witness = opt_spec_field(j, "witness");
  e.a_count = field<int>(j, "aCount");
  e.triple_count = field<int>(j, "tripleCount");
  e.degree_candidates = field<int>(j, "degreeCandidates");
  e.specs_checked = field<uint64_t>(j, "specsChecked");
  return e;
}

Json to_json(const PairGrid& g) {
  Json achieved = Json::array();
  for (const auto& [rk, spec] : g.achieved) {
    achieved.push_back({{"rank", rk.first}, {"ker", rk.second}, {"witness", to_json(spec)}});
  }
  Json theoretical = Json::array();
  for (const auto& rk : g.theoretical) theoretical.push_back({rk.first, rk.second});
  return {{"p", g.p},
          {"alpha", g.alpha},
          {"beta", g.beta},
          {"type", type_query_text(g.type)},
          {"achieved", achieved},
          {"theoretical", theoretical},
          {"specsOfType", g.specs_of_type},
          {"partial", g.partial},
          {"achievedInBox", g.achieved_in_box()}};
}

PairGrid pairs_from_json(const Json& j) {
  PairGrid g;
  g.p = field<int>(j, "p");
  g.alpha = field<int>(j, "alpha");
  g.beta = field<int>(j, "beta");
  g.type = parse_type_query(field<std::string>(j, "type"));
  for (const Json& e : field<Json>(j, "achieved")) {
    g.achieved.emplace(std::make_pair(field<int>(e, "rank"), field<int>(e, "ker")),
                       spec_from_json(field<Json>(e, "witness")));
  }
  for (const Json& e : field<Json>(j, "theoretical")) {
    g.theoretical.emplace(e.at(0).get<int>(), e.at(1).get<int>());
  }
  g.specs_of_type = field<int>(j, "specsOfType");
  g.partial = field<bool>(j, "partial");
  return g;
}

TypeQuery parse_type_query(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    parts.push_back(item);
  }
  if (parts.size() != 3) fail(ErrorCode::kParse, "type must be \"gamma,delta,kappa\": " + text);
  auto num = [&](const std::string& s) {
    try {
      size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "bad type component \"" + s + "\"");
    }
  };
  TypeQuery q;
  q.gamma = num(parts[0]);
  q.delta = num(parts[1]);
  if (parts[2] != "*") q.kappa = num(parts[2]);
  return q;
}

std::string type_query_text(const TypeQuery& q) {
  return std::to_string(q.gamma) + "," + std::to_string(q.delta) + "," +
         (q.kappa ? std::to_string(*q.kappa) : std::string("*"));
}

}  // namespace addcyc
