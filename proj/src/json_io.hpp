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

// JSON forms of specs and results. Every to_json has a matching from_json
// with to_json(from_json(j)) == j.

#ifndef ADDCYC_JSON_IO_HPP_
#define ADDCYC_JSON_IO_HPP_

#include <json.hpp>

#include "classify.hpp"

namespace addcyc {

using Json = nlohmann::json;

// Type, separability and linearity of one code.
struct CodeInfo {
  CodeSpec spec;
  TypeReport type;
  Separability separable{false, false};
  LinearityResult linearity;
  int log_size = 0;  // log_p |C|
};
CodeInfo code_info(const CodeSpec& spec, const RunConfig& cfg = {});

Json to_json(const CodeSpec& s);
// {"p","alpha","beta","a","b","f","h","g"}; alpha defaults to 0, a to 1 and
// b to 0. Polynomials as text or ascending coefficient lists.
// f h g = x^beta - 1 is validated.
CodeSpec spec_from_json(const Json& j);

Json to_json(const CodeType& t);
CodeType type_from_json(const Json& j);

Json to_json(const XnFactorization& f);
XnFactorization factorization_from_json(const Json& j);

Json to_json(const MixedWord& w);
MixedWord word_from_json(const Json& j);

Json to_json(const LinearityResult& r);
LinearityResult linearity_from_json(const Json& j);

Json to_json(const CodeInfo& c);
CodeInfo info_from_json(const Json& j);

Json to_json(const KernelResult& r);
KernelResult kernel_from_json(const Json& j);

Json to_json(const RankResult& r);
RankResult rank_from_json(const Json& j);

Json to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const TableReport& t);
TableReport table_from_json(const Json& j);

Json to_json(const TypeExistence& e);
TypeExistence existence_from_json(const Json& j);

Json to_json(const PairGrid& g);
PairGrid pairs_from_json(const Json& j);

// "g,d,k" or "g,d,*".
TypeQuery parse_type_query(const std::string& text);
std::string type_query_text(const TypeQuery& q);

}  // namespace addcyc

#endif  // ADDCYC_JSON_IO_HPP_
