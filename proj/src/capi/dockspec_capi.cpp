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

#include "dockspec/dockspec.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "json.hpp"

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"
#include "dockspec/eval/eval.hpp"
#include "dockspec/inference/infer.hpp"
#include "dockspec/retrieval/retrieval.hpp"
#include "dockspec/spec/docker_spec.hpp"
#include "dockspec/spec/word_lists.hpp"
#include "dockspec/syntax/ast.hpp"
#include "dockspec/syntax/dockerfile.hpp"
#include "dockspec/util/parallel.hpp"
#include "dockspec/util/strings.hpp"

struct dks_wordlists {
  dockspec::spec::WordLists lists;
};

struct dks_index {
  dockspec::retrieval::RetrievalIndex index;
};

namespace {

namespace fs = std::filesystem;
using dockspec::Error;
using dockspec::ErrorCode;

thread_local std::string g_last_error;

dks_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return DKS_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIo: return DKS_ERR_IO;
    case ErrorCode::kEmptyInput: return DKS_ERR_EMPTY_INPUT;
    case ErrorCode::kMalformedInstruction: return DKS_ERR_MALFORMED_INSTRUCTION;
    case ErrorCode::kShellSyntax: return DKS_ERR_SHELL_SYNTAX;
    case ErrorCode::kMalformedFrom: return DKS_ERR_MALFORMED_FROM;
    case ErrorCode::kInferenceIncomplete: return DKS_ERR_INFERENCE_INCOMPLETE;
    case ErrorCode::kSchema: return DKS_ERR_SCHEMA;
    case ErrorCode::kKindMismatch: return DKS_ERR_KIND_MISMATCH;
    case ErrorCode::kTooFewEntries: return DKS_ERR_TOO_FEW_ENTRIES;
    case ErrorCode::kEmptyCorpus: return DKS_ERR_EMPTY_CORPUS;
    case ErrorCode::kEmptyCandidate: return DKS_ERR_EMPTY_CANDIDATE;
    case ErrorCode::kEmptyManifest: return DKS_ERR_EMPTY_MANIFEST;
    case ErrorCode::kEmptySample: return DKS_ERR_EMPTY_SAMPLE;
    case ErrorCode::kFormat: return DKS_ERR_FORMAT;
  }
  return DKS_ERR_INTERNAL;
}

template <typename Fn>
dks_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DKS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const fs::filesystem_error& e) {
    g_last_error = e.what();
    return DKS_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DKS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DKS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

const dockspec::spec::WordLists& lists_or_default(const dks_wordlists* lists) {
  return lists ? lists->lists : dockspec::spec::default_word_lists();
}

std::optional<fs::path> optional_path(const char* p) {
  if (!p || !*p) return std::nullopt;
  return fs::path(p);
}

std::string parse_json(const dockspec::syntax::DockerfileDocument& doc) {
  nlohmann::ordered_json j;
  j["instructions"] = nlohmann::ordered_json::array();
  for (const auto& inst : doc.instructions) {
    nlohmann::ordered_json ji;
    ji["kind"] = std::string(kind_name(inst.kind));
    ji["arguments"] = inst.raw_arguments;
    ji["start_line"] = inst.line_span.start;
    ji["end_line"] = inst.line_span.end;
    j["instructions"].push_back(std::move(ji));
  }
  j["comments"] = nlohmann::ordered_json::array();
  for (const auto& c : doc.comments)
    j["comments"].push_back({{"line", c.line}, {"text", c.text}});
  j["ast"] = nlohmann::ordered_json::parse(dump_ast_json(dockspec::syntax::build_ast(doc)));
  return j.dump(2);
}

dockspec::corpus::BuildResult run_pipeline(const char* dir, const dks_corpus_options* options,
                                           const dks_wordlists* lists) {
  require(dir != nullptr, "corpus directory is required");
  if (!fs::is_directory(dir))
    throw Error(ErrorCode::kIo, std::string("not a directory: ") + dir);
  dks_corpus_options opts;
  dks_corpus_options_default(&opts);
  if (options) opts = *options;

  std::vector<dockspec::corpus::SourceFile> files;
  std::size_t read_errors = 0;
  for (const auto& path : dockspec::corpus::find_dockerfiles(dir)) {
    try {
      files.push_back({fs::relative(path, dir).generic_string(), dockspec::corpus::read_file(path)});
    } catch (const Error&) {
      ++read_errors;
    }
  }
  dockspec::corpus::BuildOptions build;
  build.seed = opts.seed;
  build.max_tokens = opts.max_tokens;
  build.jobs = opts.jobs == 0 ? dockspec::util::default_jobs() : opts.jobs;
  build.strict_from_words = opts.strict_from_words != 0;
  auto result = dockspec::corpus::build_corpus(files, lists_or_default(lists), build);
  result.stats.read_errors = read_errors;
  result.stats.files += read_errors;
  return result;
}

fs::path sibling(const fs::path& out, const std::string& part) {
  return out.parent_path() / (out.stem().string() + "." + part + ".jsonl");
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

extern "C" {

const char* dks_version(void) { return "0.1.0"; }

const char* dks_status_name(dks_status status) {
  switch (status) {
    case DKS_OK: return "ok";
    case DKS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DKS_ERR_IO: return "IoError";
    case DKS_ERR_EMPTY_INPUT: return "EmptyInput";
    case DKS_ERR_MALFORMED_INSTRUCTION: return "MalformedInstruction";
    case DKS_ERR_SHELL_SYNTAX: return "ShellSyntaxError";
    case DKS_ERR_MALFORMED_FROM: return "MalformedFrom";
    case DKS_ERR_INFERENCE_INCOMPLETE: return "InferenceIncomplete";
    case DKS_ERR_SCHEMA: return "SchemaError";
    case DKS_ERR_KIND_MISMATCH: return "KindMismatch";
    case DKS_ERR_TOO_FEW_ENTRIES: return "TooFewEntries";
    case DKS_ERR_EMPTY_CORPUS: return "EmptyCorpus";
    case DKS_ERR_EMPTY_CANDIDATE: return "EmptyCandidate";
    case DKS_ERR_EMPTY_MANIFEST: return "EmptyManifest";
    case DKS_ERR_EMPTY_SAMPLE: return "EmptySample";
    case DKS_ERR_FORMAT: return "FormatError";
    case DKS_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* dks_last_error(void) { return g_last_error.c_str(); }

void dks_string_free(char* s) { std::free(s); }

dks_status dks_wordlists_default(dks_wordlists** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = new dks_wordlists{dockspec::spec::default_word_lists()};
  });
}

dks_status dks_wordlists_load(const char* os_words_path, const char* stop_words_path,
                              const char* dependency_words_path, dks_wordlists** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = new dks_wordlists{dockspec::spec::load_word_lists(
        optional_path(os_words_path), optional_path(stop_words_path),
        optional_path(dependency_words_path))};
  });
}

void dks_wordlists_free(dks_wordlists* lists) { delete lists; }

dks_status dks_parse_dockerfile(const char* text, dks_format format, char** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text and out are required");
    const auto doc = dockspec::syntax::parse_dockerfile(text);
    const std::string rendered = format == DKS_FORMAT_JSON
                                     ? parse_json(doc)
                                     : dump_ast_text(dockspec::syntax::build_ast(doc));
    *out = dup_string(rendered);
  });
}

dks_status dks_infer_spec(const char* dockerfile_text, const dks_wordlists* lists,
                          char** spec_json) {
  return guarded([&] {
    require(dockerfile_text != nullptr && spec_json != nullptr, "text and out are required");
    const auto doc = dockspec::syntax::parse_dockerfile(dockerfile_text);
    const auto spec = dockspec::inference::infer_spec(doc, lists_or_default(lists));
    *spec_json = dup_string(dockspec::spec::serialize_spec(spec));
  });
}

dks_status dks_validate_spec(const char* spec_json, const dks_wordlists* lists,
                             char** violations_json) {
  return guarded([&] {
    require(spec_json != nullptr && violations_json != nullptr, "spec and out are required");
    const auto spec = dockspec::spec::deserialize_spec(spec_json);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& v : dockspec::spec::validate_spec(spec, lists_or_default(lists)))
      j.push_back({{"rule", v.rule}, {"detail", v.detail}});
    *violations_json = dup_string(j.dump());
  });
}

void dks_corpus_options_default(dks_corpus_options* options) {
  if (!options) return;
  const dockspec::corpus::BuildOptions defaults;
  options->seed = defaults.seed;
  options->max_tokens = defaults.max_tokens;
  options->jobs = 0;
  options->strict_from_words = defaults.strict_from_words ? 1 : 0;
}

dks_status dks_corpus_build(const char* dir, const char* out_path,
                            const dks_corpus_options* options, const dks_wordlists* lists,
                            char** stats_json) {
  return guarded([&] {
    require(out_path != nullptr, "output path is required");
    const auto result = run_pipeline(dir, options, lists);
    if (result.fine_tuning.empty() && result.pretraining.empty())
      throw Error(ErrorCode::kEmptyCorpus, "no eligible Dockerfiles");
    const fs::path out(out_path);
    dockspec::corpus::write_jsonl(out, result.fine_tuning);
    dockspec::corpus::write_jsonl(sibling(out, "pretrain"), result.pretraining);
    if (result.split) {
      dockspec::corpus::write_jsonl(sibling(out, "train"), result.split->train);
      dockspec::corpus::write_jsonl(sibling(out, "eval"), result.split->eval);
      dockspec::corpus::write_jsonl(sibling(out, "test"), result.split->test);
    }
    if (stats_json) *stats_json = dup_string(dockspec::corpus::stats_to_json(result.stats));
  });
}

dks_status dks_corpus_stats(const char* dir, const dks_corpus_options* options,
                            const dks_wordlists* lists, char** stats_json) {
  return guarded([&] {
    require(stats_json != nullptr, "out is null");
    const auto result = run_pipeline(dir, options, lists);
    *stats_json = dup_string(dockspec::corpus::stats_to_json(result.stats));
  });
}

dks_status dks_index_build(const char* corpus_path, double k1, double b, dks_index** out) {
  return guarded([&] {
    require(corpus_path != nullptr && out != nullptr, "corpus path and out are required");
    require(k1 >= 0.0 && b >= 0.0 && b <= 1.0, "BM25 parameters out of range");
    auto records = dockspec::corpus::read_jsonl(corpus_path);
    *out = new dks_index{dockspec::retrieval::build_index(std::move(records), {k1, b})};
  });
}

dks_status dks_index_save(const dks_index* index, const char* path) {
  return guarded([&] {
    require(index != nullptr && path != nullptr, "index and path are required");
    dockspec::retrieval::save_index(index->index, path);
  });
}

dks_status dks_index_load(const char* path, dks_index** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out are required");
    *out = new dks_index{dockspec::retrieval::load_index(path)};
  });
}

size_t dks_index_size(const dks_index* index) { return index ? index->index.size() : 0; }

void dks_index_free(dks_index* index) { delete index; }

dks_status dks_generate(const dks_index* index, const char* spec_json, size_t k,
                        dks_method method, char** hits_json) {
  return guarded([&] {
    require(index != nullptr && spec_json != nullptr && hits_json != nullptr,
            "index, spec and out are required");
    const auto spec = dockspec::spec::deserialize_spec(spec_json);
    const auto hits = method == DKS_METHOD_VECTOR
                          ? dockspec::retrieval::vector_retrieve(spec, k, index->index)
                          : dockspec::retrieval::retrieve(spec, k, index->index);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
      nlohmann::ordered_json jh;
      jh["id"] = h.doc_id;
      jh["score"] = h.score;
      jh["source"] = index->index.documents[h.doc_id].record.source;
      jh["dockerfile"] = dockspec::corpus::denormalize(h.dockerfile);
      j.push_back(std::move(jh));
    }
    *hits_json = dup_string(j.dump(2));
  });
}

dks_status dks_evaluate(const char* targets_dir, const char* const* output_dirs,
                        size_t n_outputs, const dks_wordlists* lists, unsigned jobs,
                        char** report_json) {
  return guarded([&] {
    require(targets_dir != nullptr && report_json != nullptr, "targets and out are required");
    require(output_dirs != nullptr || n_outputs == 0, "output directories are null");
    if (!fs::is_directory(targets_dir))
      throw Error(ErrorCode::kIo, std::string("not a directory: ") + targets_dir);

    std::vector<dockspec::eval::TargetFile> targets;
    for (const auto& path : dockspec::corpus::find_dockerfiles(targets_dir)) {
      const std::string name = fs::relative(path, targets_dir).generic_string();
      if (ends_with(name, ".spec.json")) continue;
      dockspec::eval::TargetFile t{name, dockspec::corpus::read_file(path), std::nullopt};
      const fs::path spec_path = path.string() + ".spec.json";
      if (fs::exists(spec_path))
        t.spec = dockspec::spec::deserialize_spec(dockspec::corpus::read_file(spec_path));
      targets.push_back(std::move(t));
    }

    std::vector<dockspec::eval::SystemOutputs> systems;
    for (size_t i = 0; i < n_outputs; ++i) {
      require(output_dirs[i] != nullptr, "output directory is null");
      if (!fs::is_directory(output_dirs[i]))
        throw Error(ErrorCode::kIo, std::string("not a directory: ") + output_dirs[i]);
      dockspec::eval::SystemOutputs system;
      system.name = output_dirs[i];
      for (const auto& t : targets) {
        const fs::path p = fs::path(output_dirs[i]) / t.name;
        if (fs::is_regular_file(p)) system.files[t.name] = dockspec::corpus::read_file(p);
      }
      systems.push_back(std::move(system));
    }

    const unsigned workers = jobs == 0 ? dockspec::util::default_jobs() : jobs;
    const auto report =
        dockspec::eval::evaluate_run(targets, systems, lists_or_default(lists), workers);
    *report_json = dup_string(dockspec::eval::report_to_json(report));
  });
}

dks_status dks_evaluate_layers(const char* original_json, const char* generated_json,
                               char** report_json) {
  return guarded([&] {
    require(original_json != nullptr && generated_json != nullptr && report_json != nullptr,
            "both manifests and out are required");
    const auto report = dockspec::eval::layer_match(dockspec::eval::parse_layer_manifest(original_json),
                                                    dockspec::eval::parse_layer_manifest(generated_json));
    *report_json = dup_string(dockspec::eval::layer_report_to_json(report));
  });
}

}  // extern "C"
