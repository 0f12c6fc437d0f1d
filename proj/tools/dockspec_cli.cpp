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

// dockspec command-line front end. Links only the C API.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dockspec/dockspec.h"

namespace {

namespace fs = std::filesystem;

enum Exit { kOk = 0, kInputError = 1, kInferenceIncomplete = 2, kConfigError = 3 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure carrying a library status, reported and mapped to an exit code.
struct ApiError : std::runtime_error {
  ApiError(dks_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
  dks_status status;
};

void check(dks_status status) {
  if (status != DKS_OK)
    throw ApiError(status, std::string(dks_status_name(status)) + ": " + dks_last_error());
}

int exit_code_for(dks_status status) {
  switch (status) {
    case DKS_ERR_INFERENCE_INCOMPLETE: return kInferenceIncomplete;
    case DKS_ERR_INVALID_ARGUMENT: return kConfigError;
    default: return kInputError;
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { dks_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct WordListsDeleter {
  void operator()(dks_wordlists* w) const { dks_wordlists_free(w); }
};
struct IndexDeleter {
  void operator()(dks_index* i) const { dks_index_free(i); }
};
using WordListsPtr = std::unique_ptr<dks_wordlists, WordListsDeleter>;
using IndexPtr = std::unique_ptr<dks_index, IndexDeleter>;

void require_file(const std::string& path, const char* what) {
  if (!fs::is_regular_file(path)) throw ConfigError(std::string(what) + " not found: " + path);
}

void require_dir(const std::string& path, const char* what) {
  if (!fs::is_directory(path)) throw ConfigError(std::string(what) + " is not a directory: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError(DKS_ERR_IO, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw ApiError(DKS_ERR_IO, "cannot write " + path);
}

struct Globals {
  std::string os_words;
  std::string stop_words;
  std::string dependency_words;
  unsigned jobs = 0;
  std::uint64_t seed = 42;
};

WordListsPtr load_lists(const Globals& g) {
  for (const auto* p : {&g.os_words, &g.stop_words, &g.dependency_words})
    if (!p->empty()) require_file(*p, "word list");
  dks_wordlists* lists = nullptr;
  check(dks_wordlists_load(g.os_words.empty() ? nullptr : g.os_words.c_str(),
                           g.stop_words.empty() ? nullptr : g.stop_words.c_str(),
                           g.dependency_words.empty() ? nullptr : g.dependency_words.c_str(),
                           &lists));
  return WordListsPtr(lists);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infer Dockerfile specifications, build corpora, retrieve and evaluate Dockerfiles",
               "dockspec"};
  app.set_version_flag("--version", dks_version());
  app.set_config("--config", "", "TOML/INI file with option defaults (flags win)");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--os-words", g.os_words, "OS word list file");
  app.add_option("--stop-words", g.stop_words, "stop word list file");
  app.add_option("--dependency-words", g.dependency_words, "known dependency word list file");
  app.add_option("--jobs", g.jobs, "worker threads (0 = available parallelism)");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();

  // parse
  auto* parse = app.add_subcommand("parse", "Parse a Dockerfile and print its tree");
  std::string parse_file;
  std::string parse_format = "text";
  parse->add_option("file", parse_file, "Dockerfile")->required();
  parse->add_option("--format", parse_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // infer-spec
  auto* infer = app.add_subcommand("infer-spec", "Infer the specification of a Dockerfile");
  std::string infer_file;
  infer->add_option("file", infer_file, "Dockerfile")->required();

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Build or inspect a spec/Dockerfile corpus");
  corpus->require_subcommand(1);
  std::string corpus_dir;
  std::string corpus_out;
  std::size_t max_tokens = 1024;
  bool lenient_from = false;
  auto* corpus_build = corpus->add_subcommand("build", "Build the corpus and its splits");
  corpus_build->add_option("dir", corpus_dir, "directory of Dockerfiles")->required();
  corpus_build->add_option("--out", corpus_out, "fine-tuning corpus output (.jsonl)")->required();
  corpus_build->add_option("--max-tokens", max_tokens, "fine-tuning length cap")
      ->capture_default_str();
  corpus_build->add_flag("--lenient-from", lenient_from, "accept unknown FROM words");
  auto* corpus_stats = corpus->add_subcommand("stats", "Print pipeline statistics");
  corpus_stats->add_option("dir", corpus_dir, "directory of Dockerfiles")->required();
  corpus_stats->add_option("--max-tokens", max_tokens, "fine-tuning length cap")
      ->capture_default_str();
  corpus_stats->add_flag("--lenient-from", lenient_from, "accept unknown FROM words");

  // index
  auto* index = app.add_subcommand("index", "Build a retrieval index");
  index->require_subcommand(1);
  auto* index_build = index->add_subcommand("build", "Index a corpus file");
  std::string index_corpus;
  std::string index_out;
  double k1 = 1.2;
  double b = 0.75;
  index_build->add_option("corpus", index_corpus, "corpus .jsonl")->required();
  index_build->add_option("--out", index_out, "index output file")->required();
  index_build->add_option("--k1", k1, "BM25 k1")->capture_default_str();
  index_build->add_option("--b", b, "BM25 b")->capture_default_str();

  // generate
  auto* generate = app.add_subcommand("generate", "Retrieve Dockerfiles for a specification");
  std::string gen_spec;
  std::string gen_index;
  std::size_t k = 1;
  std::string method = "bm25";
  bool gen_json = false;
  generate->add_option("--spec", gen_spec, "spec JSON file")->required();
  generate->add_option("--index", gen_index, "index file")->required();
  generate->add_option("-k", k, "number of hits")->capture_default_str()->check(CLI::PositiveNumber);
  generate->add_option("--method", method, "ranking method")
      ->check(CLI::IsMember({"bm25", "vector"}))
      ->capture_default_str();
  generate->add_flag("--json", gen_json, "print hits as JSON");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate generated Dockerfiles");
  std::string targets_dir;
  std::vector<std::string> output_dirs;
  std::string report_path;
  evaluate->add_option("--targets", targets_dir, "directory of target Dockerfiles");
  evaluate->add_option("--outputs", output_dirs, "directory of generated Dockerfiles (repeatable)");
  evaluate->add_option("--report", report_path, "report output (default: stdout)");
  auto* layers = evaluate->add_subcommand("layers", "Compare image layer manifests");
  std::string original_manifest;
  std::string generated_manifest;
  layers->add_option("--original", original_manifest, "original manifest JSON")->required();
  layers->add_option("--generated", generated_manifest, "generated manifest JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (parse->parsed()) {
      require_file(parse_file, "Dockerfile");
      CString out;
      check(dks_parse_dockerfile(read_text(parse_file).c_str(),
                                 parse_format == "json" ? DKS_FORMAT_JSON : DKS_FORMAT_TEXT, &out.p));
      std::cout << out.str() << '\n';
    } else if (infer->parsed()) {
      require_file(infer_file, "Dockerfile");
      auto lists = load_lists(g);
      CString out;
      check(dks_infer_spec(read_text(infer_file).c_str(), lists.get(), &out.p));
      std::cout << out.str() << '\n';
    } else if (corpus->parsed()) {
      require_dir(corpus_dir, "corpus directory");
      auto lists = load_lists(g);
      dks_corpus_options opts;
      dks_corpus_options_default(&opts);
      opts.seed = g.seed;
      opts.max_tokens = max_tokens;
      opts.jobs = g.jobs;
      opts.strict_from_words = lenient_from ? 0 : 1;
      CString stats;
      if (corpus_build->parsed()) {
        check(dks_corpus_build(corpus_dir.c_str(), corpus_out.c_str(), &opts, lists.get(), &stats.p));
        const auto j = nlohmann::json::parse(stats.str());
        if (j["fine_tuning"].get<std::size_t>() < 10)
          std::cerr << "warning: fewer than 10 fine-tuning records; split files not written\n";
      } else {
        check(dks_corpus_stats(corpus_dir.c_str(), &opts, lists.get(), &stats.p));
      }
      std::cout << stats.str() << '\n';
    } else if (index->parsed()) {
      require_file(index_corpus, "corpus");
      if (k1 < 0 || b < 0 || b > 1) throw ConfigError("BM25 parameters out of range");
      dks_index* raw = nullptr;
      check(dks_index_build(index_corpus.c_str(), k1, b, &raw));
      IndexPtr idx(raw);
      check(dks_index_save(idx.get(), index_out.c_str()));
      std::cerr << "indexed " << dks_index_size(idx.get()) << " documents\n";
    } else if (generate->parsed()) {
      require_file(gen_spec, "spec");
      require_file(gen_index, "index");
      dks_index* raw = nullptr;
      check(dks_index_load(gen_index.c_str(), &raw));
      IndexPtr idx(raw);
      CString hits;
      check(dks_generate(idx.get(), read_text(gen_spec).c_str(), k,
                         method == "vector" ? DKS_METHOD_VECTOR : DKS_METHOD_BM25, &hits.p));
      if (gen_json) {
        std::cout << hits.str() << '\n';
      } else {
        const auto j = nlohmann::json::parse(hits.str());
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i > 0) std::cout << "---\n";
          std::cout << j[i]["dockerfile"].get<std::string>();
        }
      }
    } else if (evaluate->parsed()) {
      CString report;
      if (layers->parsed()) {
        require_file(original_manifest, "original manifest");
        require_file(generated_manifest, "generated manifest");
        check(dks_evaluate_layers(read_text(original_manifest).c_str(),
                                  read_text(generated_manifest).c_str(), &report.p));
      } else {
        if (targets_dir.empty() || output_dirs.empty())
          throw ConfigError("evaluate needs --targets and at least one --outputs");
        require_dir(targets_dir, "targets");
        for (const auto& d : output_dirs) require_dir(d, "outputs");
        auto lists = load_lists(g);
        std::vector<const char*> dirs;
        for (const auto& d : output_dirs) dirs.push_back(d.c_str());
        check(dks_evaluate(targets_dir.c_str(), dirs.data(), dirs.size(), lists.get(), g.jobs,
                           &report.p));
      }
      if (report_path.empty()) {
        std::cout << report.str() << '\n';
      } else {
        write_text(report_path, report.str() + "\n");
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
