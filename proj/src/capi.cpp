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

#include "addcyc.h"

#include <algorithm>
#include <memory>
#include <string>

#include "json_io.hpp"

struct adc_context {
  addcyc::RunConfig cfg;
  std::string result = "null";
  std::string error;
};

struct adc_code {
  addcyc::CodeSpec spec;
};

namespace {

using addcyc::ErrorCode;
using addcyc::Json;

adc_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::kBudgetExceeded: return ADC_BUDGET_EXCEEDED;
    case ErrorCode::kStructuralMismatch: return ADC_STRUCTURAL_MISMATCH;
    case ErrorCode::kNonPowerCardinality: return ADC_INTERNAL_ERROR;
    default: return ADC_INPUT_ERROR;
  }
}

// Runs fn, storing its JSON in ctx->result; maps exceptions to statuses.
template <class F>
adc_status guarded(adc_context* ctx, F&& fn) {
  if (ctx == nullptr) return ADC_INPUT_ERROR;
  ctx->error.clear();
  ctx->result = "null";
  try {
    return fn();
  } catch (const addcyc::Error& e) {
    ctx->error = e.what();
    return status_of(e.code());
  } catch (const Json::exception& e) {
    ctx->error = std::string("ParseError: ") + e.what();
    return ADC_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    ctx->error = "Internal: out of memory";
    return ADC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    ctx->error = std::string("Internal: ") + e.what();
    return ADC_INTERNAL_ERROR;
  }
}

adc_status store(adc_context* ctx, const Json& j) {
  ctx->result = j.dump();
  return ADC_OK;
}

Json parse_text(const char* text, const char* what) {
  if (text == nullptr) addcyc::fail(ErrorCode::kParse, std::string(what) + " is null");
  return Json::parse(text);
}

addcyc::Method method_of(const char* m) {
  return addcyc::parse_method(m == nullptr ? "both" : m);
}

void require_code(const adc_code* code) {
  if (code == nullptr) addcyc::fail(ErrorCode::kInvalidArgument, "code handle is null");
}

}  // namespace

extern "C" {

const char* adc_version(void) { return "1.0.0"; }

adc_context* adc_context_new(void) {
  try {
    return new adc_context();
  } catch (...) {
    return nullptr;
  }
}

void adc_context_free(adc_context* ctx) { delete ctx; }

adc_status adc_configure(adc_context* ctx, const char* config_json) {
  return guarded(ctx, [&] {
    const Json j = parse_text(config_json, "config");
    if (!j.is_object()) addcyc::fail(ErrorCode::kParse, "config must be a JSON object");
    addcyc::RunConfig cfg = ctx->cfg;
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number_integer() || value.get<long long>() <= 0) {
        addcyc::fail(ErrorCode::kInvalidArgument, "config \"" + key + "\" must be a positive integer");
      }
      const uint64_t v = value.get<uint64_t>();
      if (key == "residueBudget") {
        cfg.residue_budget = v;
      } else if (key == "wordBudget") {
        cfg.word_budget = v;
      } else if (key == "pairBudget") {
        cfg.pair_budget = v;
      } else if (key == "workers") {
        cfg.workers = static_cast<int>(std::min<uint64_t>(v, 1024));
      } else if (key == "seed") {
        cfg.seed = v;
      } else {
        addcyc::fail(ErrorCode::kInvalidArgument, "unknown config key \"" + key + "\"");
      }
    }
    ctx->cfg = cfg;
    return store(ctx, {{"residueBudget", cfg.residue_budget},
                       {"wordBudget", cfg.word_budget},
                       {"pairBudget", cfg.pair_budget},
                       {"workers", cfg.workers},
                       {"seed", cfg.seed}});
  });
}

const char* adc_result(const adc_context* ctx) { return ctx ? ctx->result.c_str() : "null"; }

const char* adc_error(const adc_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

adc_status adc_code_new(adc_context* ctx, const char* spec_json, adc_code** out) {
  return guarded(ctx, [&] {
    if (out == nullptr) addcyc::fail(ErrorCode::kInvalidArgument, "out is null");
    *out = nullptr;
    auto code = std::make_unique<adc_code>();
    code->spec = addcyc::spec_from_json(parse_text(spec_json, "spec"));
    store(ctx, addcyc::to_json(code->spec));
    *out = code.release();
    return ADC_OK;
  });
}

void adc_code_free(adc_code* code) { delete code; }

adc_status adc_code_spec(adc_context* ctx, const adc_code* code) {
  return guarded(ctx, [&] {
    require_code(code);
    return store(ctx, addcyc::to_json(code->spec));
  });
}

adc_status adc_factor(adc_context* ctx, int p, int n) {
  return guarded(ctx, [&] {
    if (!addcyc::is_prime(p)) addcyc::fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    if (n < 1 || n % p == 0) {
      addcyc::fail(ErrorCode::kInvalidArgument, "n must be positive and coprime to p");
    }
    return store(ctx, addcyc::to_json(addcyc::factor_xn_minus_1(addcyc::PrimeBase(p), n)));
  });
}

adc_status adc_info(adc_context* ctx, const adc_code* code) {
  return guarded(ctx, [&] {
    require_code(code);
    return store(ctx, addcyc::to_json(addcyc::code_info(code->spec, ctx->cfg)));
  });
}

adc_status adc_gray(adc_context* ctx, int p, const char* word_json) {
  return guarded(ctx, [&] {
    if (!addcyc::is_prime(p)) addcyc::fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    const addcyc::PrimeBase base(p);
    const addcyc::MixedWord w = addcyc::word_from_json(parse_text(word_json, "word"));
    for (uint8_t x : w.x) {
      if (x >= p) addcyc::fail(ErrorCode::kOutOfRange, "x entry not in [0, p)");
    }
    const addcyc::GrayWord g = addcyc::gray_word(w, base);
    const std::vector<int> entries(g.entries.begin(), g.entries.end());
    return store(ctx, {{"word", addcyc::to_json(w)}, {"gray", g.str()}, {"entries", entries}});
  });
}

adc_status adc_kernel(adc_context* ctx, const adc_code* code, const char* method) {
  return guarded(ctx, [&] {
    require_code(code);
    const addcyc::Method m = method_of(method);
    if (m != addcyc::Method::kBoth) {
      return store(ctx, addcyc::to_json(addcyc::kernel(code->spec, m, ctx->cfg)));
    }
    const addcyc::KernelResult r = addcyc::kernel_compare(code->spec, ctx->cfg);
    store(ctx, addcyc::to_json(r));
    if (r.agreement) return ADC_OK;
    ctx->error = "StructuralMismatch: kernel: oracle dim " + std::to_string(r.dim) +
                 ", structural dim " + std::to_string(*r.structural_dim) + " (k' = " +
                 r.k_poly->str() + ")";
    return ADC_STRUCTURAL_MISMATCH;
  });
}

adc_status adc_rank(adc_context* ctx, const adc_code* code, const char* method) {
  return guarded(ctx, [&] {
    require_code(code);
    const addcyc::Method m = method_of(method);
    if (m != addcyc::Method::kBoth) {
      return store(ctx, addcyc::to_json(addcyc::rank(code->spec, m, ctx->cfg)));
    }
    const addcyc::RankResult r = addcyc::rank_compare(code->spec, ctx->cfg);
    store(ctx, addcyc::to_json(r));
    if (r.agreement) return ADC_OK;
    ctx->error = "StructuralMismatch: rank: oracle " + std::to_string(r.dim) + ", structural " +
                 std::to_string(*r.structural_dim) + " (r = " + r.r_poly->str() + ")";
    return ADC_STRUCTURAL_MISMATCH;
  });
}

adc_status adc_classify(adc_context* ctx, int p, int alpha, int beta, uint64_t b_cap) {
  return guarded(ctx, [&] {
    return store(ctx, addcyc::to_json(addcyc::classify(p, alpha, beta, ctx->cfg, b_cap)));
  });
}

adc_status adc_table1(adc_context* ctx, int p, int n) {
  return guarded(ctx, [&] {
    const addcyc::TableReport t = addcyc::table_q_case(p, n, ctx->cfg);
    Json j = addcyc::to_json(t);
    j["text"] = t.render();
    return store(ctx, j);
  });
}

adc_status adc_pairs(adc_context* ctx, int p, int alpha, int beta, const char* type,
                     uint64_t b_cap) {
  return guarded(ctx, [&] {
    if (type == nullptr) addcyc::fail(ErrorCode::kParse, "type is null");
    const addcyc::PairGrid g =
        addcyc::pair_grid(p, alpha, beta, addcyc::parse_type_query(type), ctx->cfg, b_cap);
    Json j = addcyc::to_json(g);
    j["textGeneral"] = g.render(false);
    j["textCyclic"] = g.render(true);
    return store(ctx, j);
  });
}

adc_status adc_type_exists(adc_context* ctx, int p, int alpha, int beta, const char* type,
                           uint64_t b_cap) {
  return guarded(ctx, [&] {
    if (type == nullptr) addcyc::fail(ErrorCode::kParse, "type is null");
    return store(ctx, addcyc::to_json(addcyc::cyclic_type_exists(
                          p, alpha, beta, addcyc::parse_type_query(type), b_cap)));
  });
}

}  // extern "C"
