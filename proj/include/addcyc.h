/* Copyright 2026 The addcyc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to addcyc: Z_pZ_{p^2}-additive cyclic codes, their Gray
 * images, kernels and ranks.
 *
 * Every call that produces a result stores it as a JSON document inside the
 * context; adc_result() returns it until the next call on that context.
 * On failure adc_error() holds "<ErrorName>: <message>". A context is not
 * thread-safe; use one per thread.
 */

#ifndef ADDCYC_H_
#define ADDCYC_H_

#include <stdint.h>

#if defined(_WIN32)
#define ADC_API __declspec(dllexport)
#else
#define ADC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct adc_context adc_context;
typedef struct adc_code adc_code;

typedef enum adc_status {
  ADC_OK = 0,
  ADC_INPUT_ERROR = 2,         /* malformed input, invalid spec, unmet hypothesis */
  ADC_STRUCTURAL_MISMATCH = 3, /* structural method disagrees with the oracle */
  ADC_BUDGET_EXCEEDED = 4,
  ADC_INTERNAL_ERROR = 5
} adc_status;

ADC_API const char* adc_version(void);

ADC_API adc_context* adc_context_new(void);
ADC_API void adc_context_free(adc_context* ctx);

/* JSON object with any of "residueBudget", "wordBudget", "pairBudget",
 * "workers", "seed". Unknown keys are rejected. */
ADC_API adc_status adc_configure(adc_context* ctx, const char* config_json);

ADC_API const char* adc_result(const adc_context* ctx);
ADC_API const char* adc_error(const adc_context* ctx);

/* Code handles. spec_json: {"p","alpha","beta","a","b","f","h","g"}. */
ADC_API adc_status adc_code_new(adc_context* ctx, const char* spec_json, adc_code** out);
ADC_API void adc_code_free(adc_code* code);
/* Canonical spec JSON of the handle. */
ADC_API adc_status adc_code_spec(adc_context* ctx, const adc_code* code);

/* Basic-irreducible factorization of x^n - 1 over Z_{p^2}. */
ADC_API adc_status adc_factor(adc_context* ctx, int p, int n);

/* Formula and matrix types, separability and linearity. */
ADC_API adc_status adc_info(adc_context* ctx, const adc_code* code);

/* Gray image of {"x":[...],"y":[...]}. */
ADC_API adc_status adc_gray(adc_context* ctx, int p, const char* word_json);

/* method: "oracle", "structural" or "both". With "both" a disagreement
 * returns ADC_STRUCTURAL_MISMATCH and the result still holds both values. */
ADC_API adc_status adc_kernel(adc_context* ctx, const adc_code* code, const char* method);
ADC_API adc_status adc_rank(adc_context* ctx, const adc_code* code, const char* method);

/* All cyclic codes for (p, alpha, beta) with rank and kernel. b runs over
 * every residue mod a when p^deg(a) <= b_cap. */
ADC_API adc_status adc_classify(adc_context* ctx, int p, int alpha, int beta, uint64_t b_cap);

/* Rank/kernel table for n = q or q^2; the result has a "text" rendering. */
ADC_API adc_status adc_table1(adc_context* ctx, int p, int n);

/* type: "gamma,delta,kappa" with kappa possibly "*". */
ADC_API adc_status adc_pairs(adc_context* ctx, int p, int alpha, int beta, const char* type,
                             uint64_t b_cap);
ADC_API adc_status adc_type_exists(adc_context* ctx, int p, int alpha, int beta,
                                   const char* type, uint64_t b_cap);

#ifdef __cplusplus
}
#endif

#endif /* ADDCYC_H_ */
