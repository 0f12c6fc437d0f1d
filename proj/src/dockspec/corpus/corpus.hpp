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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dockspec/spec/docker_spec.hpp"
#include "dockspec/spec/word_lists.hpp"
#include "dockspec/syntax/dockerfile.hpp"

namespace dockspec::corpus {

struct Provenance {
  std::string source;
  std::string content_hash;
};

struct CorpusEntry {
  spec::DockerSpec spec;
  syntax::DockerfileDocument dockerfile;
  Provenance provenance;
};

struct SpecCluster {
  spec::DockerSpec spec;
  std::vector<CorpusEntry> members;
};

// On-disk corpus line: the spec with the normalized Dockerfile text.
struct CorpusRecord {
  spec::DockerSpec spec;
  std::string dockerfile;
  std::string sha1;
  std::string source;

  bool operator==(const CorpusRecord&) const = default;
};

template <typename Entry>
struct Split {
  std::vector<Entry> train;
  std::vector<Entry> eval;
  std::vector<Entry> test;
  std::uint64_t seed = 0;
};
using DatasetSplit = Split<CorpusEntry>;

// ---- filtering -------------------------------------------------------------

enum class FilterReason {
  kEligible,
  kNoComments,
  kMultiStage,
  kUnknownFromWord,
  kShellSyntaxError,
  kEmptyInstruction,
};

std::string_view reason_name(FilterReason reason);

struct FilterDecision {
  FilterReason reason = FilterReason::kEligible;
  std::string detail;

  bool eligible() const { return reason == FilterReason::kEligible; }
};

// Rules are checked in enum order; the first failing rule is reported.
// With `strict_from_words` off, unknown FROM words are accepted.
FilterDecision filter_eligible(const syntax::DockerfileDocument& doc, const spec::WordLists& lists,
                               bool strict_from_words = true);

// Keeps the first entry per content hash, preserving order.
std::vector<CorpusEntry> dedup(std::vector<CorpusEntry> entries);

// ---- representative selection ---------------------------------------------

// Jaccard similarity of the whitespace-token sets of two same-kind
// instructions; 1.0 when both sets are empty. Throws Error(kKindMismatch).
double instruction_jaccard(const syntax::Instruction& a, const syntax::Instruction& b);

// Mean over A's instructions of the mean over the other members of the best
// same-kind Jaccard match (0 when a member has no instruction of that kind).
std::vector<double> representative_scores(const SpecCluster& cluster);

// Index of the member with the highest score; ties go to fewer
// instructions, then the lexicographically smaller content hash. The result
// does not depend on member order.
std::size_t select_representative(const SpecCluster& cluster);

// ---- normalization -----------------------------------------------------------

inline constexpr std::string_view kNewlineMarker = "<nl>";

// Sorts install-statement packages, drops comments, and emits every
// instruction as "KIND args <nl>" on a single line.
std::string normalize_for_training(const syntax::DockerfileDocument& doc);

// Inverse of the line collapsing: one instruction per line.
std::string denormalize(std::string_view normalized);

std::size_t token_length(std::string_view text);

// ---- splitting ----------------------------------------------------------------

// Seeded shuffle, then 80/10/10. Throws Error(kTooFewEntries) below 10.
template <typename Entry>
Split<Entry> split_dataset(std::vector<Entry> entries, std::uint64_t seed);

extern template Split<CorpusEntry> split_dataset(std::vector<CorpusEntry>, std::uint64_t);
extern template Split<CorpusRecord> split_dataset(std::vector<CorpusRecord>, std::uint64_t);

// ---- pipeline -----------------------------------------------------------------

struct BuildOptions {
  std::uint64_t seed = 42;
  std::size_t max_tokens = 1024;
  unsigned jobs = 1;
  bool strict_from_words = true;
};

struct BuildStats {
  std::size_t files = 0;
  std::size_t read_errors = 0;
  std::size_t duplicates = 0;
  std::size_t parse_errors = 0;
  std::map<std::string, std::size_t> rejected;  // by reason name
  std::size_t inference_incomplete = 0;
  std::size_t eligible = 0;
  std::size_t clusters = 0;
  std::size_t multi_member_clusters = 0;
  std::size_t pretraining = 0;
  std::size_t too_long = 0;
  std::size_t fine_tuning = 0;
  std::size_t train = 0;
  std::size_t eval = 0;
  std::size_t test = 0;
};

struct SourceFile {
  std::string source;
  std::string text;
};

struct BuildResult {
  std::vector<CorpusRecord> fine_tuning;  // representatives with dependencies, within cap
  std::vector<CorpusRecord> pretraining;  // other cluster members and dependency-free specs
  std::optional<Split<CorpusRecord>> split;
  BuildStats stats;
};

BuildResult build_corpus(const std::vector<SourceFile>& files, const spec::WordLists& lists,
                         const BuildOptions& options);

// Dockerfile-looking files under `dir` (Dockerfile, Dockerfile.*, *.Dockerfile,
// *.dockerfile), recursively, sorted by path.
std::vector<std::filesystem::path> find_dockerfiles(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);

std::string stats_to_json(const BuildStats& stats);

// ---- JSONL --------------------------------------------------------------------

std::string record_to_json(const CorpusRecord& record);
CorpusRecord record_from_json(std::string_view line);
void write_jsonl(const std::filesystem::path& path, const std::vector<CorpusRecord>& records);
std::vector<CorpusRecord> read_jsonl(const std::filesystem::path& path);

}  // namespace dockspec::corpus
