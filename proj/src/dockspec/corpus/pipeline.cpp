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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"
#include "dockspec/inference/image_reference.hpp"
#include "dockspec/inference/infer.hpp"
#include "dockspec/syntax/shell.hpp"
#include "dockspec/util/parallel.hpp"
#include "dockspec/util/rng.hpp"
#include "dockspec/util/sha1.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::corpus {
namespace {

namespace fs = std::filesystem;
using syntax::InstructionKind;

bool unevaluated_word(std::string_view w, const spec::WordLists& lists) {
  if (!util::has_alpha(w) || w.size() < 3) return false;
  return !lists.is_known(w);
}

bool is_dockerfile_name(const std::string& name) {
  if (name == "Dockerfile" || name.rfind("Dockerfile.", 0) == 0) return true;
  const auto dot = name.rfind('.');
  if (dot == std::string::npos) return false;
  const std::string ext = name.substr(dot + 1);
  return ext == "Dockerfile" || ext == "dockerfile";
}

// Per-file result of the parallel ingestion phase.
struct Ingested {
  bool read_ok = false;
  std::string hash;
  bool parsed = false;
  FilterReason reason = FilterReason::kEligible;
  bool inferred = false;
  std::optional<CorpusEntry> entry;
  std::string normalized;
};

CorpusRecord to_record(const CorpusEntry& e, std::string normalized) {
  return {e.spec, std::move(normalized), e.provenance.content_hash, e.provenance.source};
}

}  // namespace

std::string_view reason_name(FilterReason reason) {
  switch (reason) {
    case FilterReason::kEligible: return "eligible";
    case FilterReason::kNoComments: return "no-comments";
    case FilterReason::kMultiStage: return "multi-stage";
    case FilterReason::kUnknownFromWord: return "unknown-from-word";
    case FilterReason::kShellSyntaxError: return "shell-syntax-error";
    case FilterReason::kEmptyInstruction: return "empty-instruction";
  }
  return "unknown";
}

FilterDecision filter_eligible(const syntax::DockerfileDocument& doc, const spec::WordLists& lists,
                               bool strict_from_words) {
  if (doc.comments.empty()) return {FilterReason::kNoComments, "no comment lines"};
  if (doc.from_count() > 1)
    return {FilterReason::kMultiStage, std::to_string(doc.from_count()) + " FROM instructions"};

  if (strict_from_words) {
    for (const auto& inst : doc.instructions) {
      if (inst.kind != InstructionKind::kFrom || inst.raw_arguments.empty()) continue;
      inference::ImageReference ref;
      try {
        ref = inference::split_image_reference(inst.raw_arguments);
      } catch (const Error& e) {
        return {FilterReason::kUnknownFromWord, e.what()};
      }
      for (const auto* words : {&ref.name_words, &ref.tag_words})
        for (const auto& w : *words)
          if (unevaluated_word(w, lists)) return {FilterReason::kUnknownFromWord, w};
    }
  }

  for (const auto& inst : doc.instructions) {
    if (inst.kind != InstructionKind::kRun || inst.raw_arguments.empty()) continue;
    if (syntax::exec_form(inst)) continue;
    try {
      syntax::parse_shell(inst.raw_arguments);
    } catch (const Error& e) {
      return {FilterReason::kShellSyntaxError,
              "line " + std::to_string(inst.line_span.start) + ": " + e.what()};
    }
  }

  for (const auto& inst : doc.instructions) {
    if (inst.raw_arguments.empty()) {
      return {FilterReason::kEmptyInstruction, std::string(kind_name(inst.kind)) + " at line " +
                                                   std::to_string(inst.line_span.start)};
    }
  }
  return {};
}

std::vector<CorpusEntry> dedup(std::vector<CorpusEntry> entries) {
  std::unordered_set<std::string> seen;
  std::vector<CorpusEntry> out;
  out.reserve(entries.size());
  for (auto& e : entries)
    if (seen.insert(e.provenance.content_hash).second) out.push_back(std::move(e));
  return out;
}

template <typename Entry>
Split<Entry> split_dataset(std::vector<Entry> entries, std::uint64_t seed) {
  const std::size_t n = entries.size();
  if (n < 10) {
    throw Error(ErrorCode::kTooFewEntries,
                "need at least 10 entries to split, got " + std::to_string(n));
  }
  util::Rng rng(seed);
  rng.shuffle(entries);
  const auto n_train = static_cast<std::size_t>(std::llround(0.8 * static_cast<double>(n)));
  const auto n_eval = static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(n)));

  Split<Entry> split;
  split.seed = seed;
  auto it = std::make_move_iterator(entries.begin());
  split.train.assign(it, it + static_cast<std::ptrdiff_t>(n_train));
  split.eval.assign(it + static_cast<std::ptrdiff_t>(n_train),
                    it + static_cast<std::ptrdiff_t>(n_train + n_eval));
  split.test.assign(it + static_cast<std::ptrdiff_t>(n_train + n_eval),
                    std::make_move_iterator(entries.end()));
  return split;
}

template Split<CorpusEntry> split_dataset(std::vector<CorpusEntry>, std::uint64_t);
template Split<CorpusRecord> split_dataset(std::vector<CorpusRecord>, std::uint64_t);

BuildResult build_corpus(const std::vector<SourceFile>& files, const spec::WordLists& lists,
                         const BuildOptions& options) {
  BuildResult result;
  BuildStats& stats = result.stats;
  stats.files = files.size();

  std::vector<Ingested> ingested(files.size());
  util::parallel_for(files.size(), options.jobs, [&](std::size_t i) {
    Ingested& out = ingested[i];
    out.read_ok = true;
    out.hash = util::sha1_hex(files[i].text);
    syntax::DockerfileDocument doc;
    try {
      doc = syntax::parse_dockerfile(files[i].text);
    } catch (const Error&) {
      return;
    }
    out.parsed = true;
    out.reason = filter_eligible(doc, lists, options.strict_from_words).reason;
    if (out.reason != FilterReason::kEligible) return;
    try {
      spec::DockerSpec spec = inference::infer_spec(doc, lists);
      out.inferred = true;
      out.normalized = normalize_for_training(doc);
      out.entry = CorpusEntry{std::move(spec), std::move(doc), {files[i].source, out.hash}};
    } catch (const Error&) {
    }
  });

  // Reduction phase, in input order.
  std::unordered_set<std::string> seen;
  std::map<std::string, SpecCluster> clusters;  // keyed by canonical spec text
  std::map<std::string, std::string> normalized_by_hash;
  for (auto& item : ingested) {
    if (!seen.insert(item.hash).second) {
      ++stats.duplicates;
      continue;
    }
    if (!item.parsed) {
      ++stats.parse_errors;
      continue;
    }
    if (item.reason != FilterReason::kEligible) {
      ++stats.rejected[std::string(reason_name(item.reason))];
      continue;
    }
    if (!item.inferred) {
      ++stats.inference_incomplete;
      continue;
    }
    ++stats.eligible;
    normalized_by_hash[item.hash] = std::move(item.normalized);
    const std::string key = spec::serialize_spec(item.entry->spec);
    auto& cluster = clusters[key];
    cluster.spec = item.entry->spec;
    cluster.members.push_back(std::move(*item.entry));
  }

  stats.clusters = clusters.size();
  for (auto& [key, cluster] : clusters) {
    if (cluster.members.size() > 1) ++stats.multi_member_clusters;
    const std::size_t rep = select_representative(cluster);
    for (std::size_t i = 0; i < cluster.members.size(); ++i) {
      const auto& member = cluster.members[i];
      CorpusRecord record = to_record(member, normalized_by_hash[member.provenance.content_hash]);
      if (i != rep || cluster.spec.dependencies.empty()) {
        result.pretraining.push_back(std::move(record));
      } else if (token_length(record.dockerfile) > options.max_tokens) {
        ++stats.too_long;
      } else {
        result.fine_tuning.push_back(std::move(record));
      }
    }
  }
  stats.pretraining = result.pretraining.size();
  stats.fine_tuning = result.fine_tuning.size();

  if (result.fine_tuning.size() >= 10) {
    result.split = split_dataset(result.fine_tuning, options.seed);
    stats.train = result.split->train.size();
    stats.eval = result.split->eval.size();
    stats.test = result.split->test.size();
  }
  return result;
}

std::vector<fs::path> find_dockerfiles(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && is_dockerfile_name(entry.path().filename().string()))
      out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string stats_to_json(const BuildStats& s) {
  nlohmann::ordered_json j;
  j["files"] = s.files;
  j["read_errors"] = s.read_errors;
  j["duplicates"] = s.duplicates;
  j["parse_errors"] = s.parse_errors;
  j["rejected"] = nlohmann::ordered_json::object();
  for (auto reason : {FilterReason::kNoComments, FilterReason::kMultiStage,
                      FilterReason::kUnknownFromWord, FilterReason::kShellSyntaxError,
                      FilterReason::kEmptyInstruction}) {
    const std::string name(reason_name(reason));
    auto it = s.rejected.find(name);
    j["rejected"][name] = it == s.rejected.end() ? 0 : it->second;
  }
  j["inference_incomplete"] = s.inference_incomplete;
  j["eligible"] = s.eligible;
  j["clusters"] = s.clusters;
  j["multi_member_clusters"] = s.multi_member_clusters;
  j["pretraining"] = s.pretraining;
  j["too_long"] = s.too_long;
  j["fine_tuning"] = s.fine_tuning;
  j["train"] = s.train;
  j["eval"] = s.eval;
  j["test"] = s.test;
  return j.dump(2);
}

}  // namespace dockspec::corpus
