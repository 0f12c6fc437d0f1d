// Copyright 2026 The dockspec Authors
//
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

/* dockspec C API.
 *
 * Every function returns a dks_status. On failure the message of the most
 * recent error on the calling thread is available from dks_last_error().
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with dks_string_free().
 */
#ifndef DOCKSPEC_DOCKSPEC_H
#define DOCKSPEC_DOCKSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(DOCKSPEC_BUILDING_LIBRARY)
#define DKS_API __attribute__((visibility("default")))
#else
#define DKS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dks_status {
  DKS_OK = 0,
  DKS_ERR_INVALID_ARGUMENT,
  DKS_ERR_IO,
  DKS_ERR_EMPTY_INPUT,
  DKS_ERR_MALFORMED_INSTRUCTION,
  DKS_ERR_SHELL_SYNTAX,
  DKS_ERR_MALFORMED_FROM,
  DKS_ERR_INFERENCE_INCOMPLETE,
  DKS_ERR_SCHEMA,
  DKS_ERR_KIND_MISMATCH,
  DKS_ERR_TOO_FEW_ENTRIES,
  DKS_ERR_EMPTY_CORPUS,
  DKS_ERR_EMPTY_CANDIDATE,
  DKS_ERR_EMPTY_MANIFEST,
  DKS_ERR_EMPTY_SAMPLE,
  DKS_ERR_FORMAT,
  DKS_ERR_INTERNAL
} dks_status;

typedef struct dks_wordlists dks_wordlists;
typedef struct dks_index dks_index;

DKS_API const char* dks_version(void);
DKS_API const char* dks_status_name(dks_status status);
DKS_API const char* dks_last_error(void);
DKS_API void dks_string_free(char* s);

/* Word lists. NULL paths fall back to the built-in lists. */
DKS_API dks_status dks_wordlists_default(dks_wordlists** out);
DKS_API dks_status dks_wordlists_load(const char* os_words_path, const char* stop_words_path,
                                      const char* dependency_words_path, dks_wordlists** out);
DKS_API void dks_wordlists_free(dks_wordlists* lists);

/* Parsing. Text output is an indented AST; JSON output also lists the
 * instructions and comments with their line numbers. */
typedef enum dks_format { DKS_FORMAT_TEXT = 0, DKS_FORMAT_JSON = 1 } dks_format;

DKS_API dks_status dks_parse_dockerfile(const char* text, dks_format format, char** out);

/* Spec inference and validation. Specs travel as canonical JSON. */
DKS_API dks_status dks_infer_spec(const char* dockerfile_text, const dks_wordlists* lists,
                                  char** spec_json);
/* Writes a JSON list of {"rule","detail"} objects; empty when valid. */
DKS_API dks_status dks_validate_spec(const char* spec_json, const dks_wordlists* lists,
                                     char** violations_json);

/* Corpus building. */
typedef struct dks_corpus_options {
  uint64_t seed;
  size_t max_tokens;
  unsigned jobs; /* 0 = available parallelism */
  int strict_from_words;
} dks_corpus_options;

DKS_API void dks_corpus_options_default(dks_corpus_options* options);

/* Builds the corpus from the Dockerfiles under dir and writes the
 * fine-tuning records to out_path. Alongside it go <stem>.pretrain.jsonl and,
 * with at least 10 fine-tuning records, <stem>.train/.eval/.test.jsonl.
 * Fails with DKS_ERR_EMPTY_CORPUS when nothing survives filtering. */
DKS_API dks_status dks_corpus_build(const char* dir, const char* out_path,
                                    const dks_corpus_options* options, const dks_wordlists* lists,
                                    char** stats_json);
/* Same pipeline without writing anything. */
DKS_API dks_status dks_corpus_stats(const char* dir, const dks_corpus_options* options,
                                    const dks_wordlists* lists, char** stats_json);

/* Retrieval. */
typedef enum dks_method { DKS_METHOD_BM25 = 0, DKS_METHOD_VECTOR = 1 } dks_method;

DKS_API dks_status dks_index_build(const char* corpus_path, double k1, double b, dks_index** out);
DKS_API dks_status dks_index_save(const dks_index* index, const char* path);
DKS_API dks_status dks_index_load(const char* path, dks_index** out);
DKS_API size_t dks_index_size(const dks_index* index);
DKS_API void dks_index_free(dks_index* index);

/* Writes a JSON list of {"id","score","source","dockerfile"} hits, best
 * first; "dockerfile" is one instruction per line. */
DKS_API dks_status dks_generate(const dks_index* index, const char* spec_json, size_t k,
                                dks_method method, char** hits_json);

/* Evaluation. Targets are the Dockerfiles under targets_dir; a target may
 * carry its spec in a sibling "<file>.spec.json". Each output directory holds
 * one system's files under the same relative paths. */
DKS_API dks_status dks_evaluate(const char* targets_dir, const char* const* output_dirs,
                                size_t n_outputs, const dks_wordlists* lists, unsigned jobs,
                                char** report_json);
/* Manifests are JSON texts: a list of layer digests or
 * {"image": digest, "layers": [...]}. */
DKS_API dks_status dks_evaluate_layers(const char* original_json, const char* generated_json,
                                       char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DOCKSPEC_DOCKSPEC_H */
