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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dockspec/spec/docker_spec.hpp"
#include "dockspec/spec/word_lists.hpp"
#include "dockspec/syntax/ast.hpp"

namespace dockspec::eval {

// ---- adherence ----------------------------------------------------------------

struct AdherenceReport {
  // Indexed like spec::kFieldNames; all but dependencies are 0 or 1.
  std::array<double, std::size(spec::kFieldNames)> scores{};

  double dependency_recall() const { return scores[2]; }
};

// Recall over dependencies is 1.0 when the target requires none.
AdherenceReport adherence(const spec::DockerSpec& target, const spec::DockerSpec& obtained);

// ---- tree distance ------------------------------------------------------------

// Zhang-Shasha ordered tree edit distance with unit costs.
std::size_t tree_edit_distance(const syntax::TreeNode& a, const syntax::TreeNode& b);

struct DistanceReport {
  std::size_t raw = 0;
  double normalized = 0.0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

DistanceReport distance(const syntax::TreeNode& a, const syntax::TreeNode& b);
double normalized_distance(const syntax::TreeNode& a, const syntax::TreeNode& b);

// ---- BLEU ---------------------------------------------------------------------

// Sentence BLEU-4 with uniform weights. A zero n-gram precision is replaced by
// 1 / (2 * candidate length). Throws Error(kEmptyCandidate).
double bleu4(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

// ---- layers -------------------------------------------------------------------

struct LayerReport {
  bool digest_equal = false;
  double matching_layer_ratio = 0.0;
};

// Throws Error(kEmptyManifest) when the original has no layers, and
// Error(kInvalidArgument) when equal image digests come with differing layers.
LayerReport layer_match(const std::vector<std::string>& original,
                        const std::vector<std::string>& generated,
                        std::string_view original_digest, std::string_view generated_digest);

struct LayerManifest {
  std::optional<std::string> image_digest;
  std::vector<std::string> layers;
};

// Either a JSON list of layer digests or {"image": "...", "layers": [...]}.
LayerManifest parse_layer_manifest(std::string_view json_text);

// Manifests without an image digest compare equal when their layer lists are.
LayerReport layer_match(const LayerManifest& original, const LayerManifest& generated);

// ---- statistics ---------------------------------------------------------------

struct MannWhitney {
  double u = 0.0;  // U statistic of the first sample
  double p = 1.0;  // two-sided
  bool exact = false;
};

inline constexpr std::size_t kExactMannWhitneyLimit = 16;

// Exact permutation distribution up to kExactMannWhitneyLimit pooled
// observations, tie-corrected normal approximation with continuity
// correction above. Throws Error(kEmptySample).
MannWhitney mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

std::vector<double> benjamini_hochberg(const std::vector<double>& p_values);

struct CliffsDelta {
  double delta = 0.0;
  std::string magnitude;
};

std::string_view cliffs_magnitude(double delta);
CliffsDelta cliffs_delta(const std::vector<double>& a, const std::vector<double>& b);

// ---- runs ---------------------------------------------------------------------

struct TargetFile {
  std::string name;
  std::string text;
  std::optional<spec::DockerSpec> spec;  // inferred from text when absent
};

struct SystemOutputs {
  std::string name;
  std::map<std::string, std::string> files;  // target name -> generated text
};

struct PairResult {
  std::string name;
  std::optional<std::string> error;
  AdherenceReport adherence;
  DistanceReport distance;
  double bleu = 0.0;
};

struct Summary {
  double min = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // population
};

Summary summarize(std::vector<double> values);

struct SystemReport {
  std::string name;
  std::vector<PairResult> pairs;  // in target order
  std::size_t evaluated = 0;
  std::array<double, std::size(spec::kFieldNames)> adherence_means{};
  Summary distance;
  double bleu_mean = 0.0;

  std::vector<double> distances() const;
};

struct Comparison {
  std::string a;
  std::string b;
  MannWhitney test;
  double p_adjusted = 1.0;
  CliffsDelta effect;
};

struct RunReport {
  std::vector<SystemReport> systems;
  std::vector<Comparison> comparisons;  // every system pairing, BH-adjusted
};

PairResult evaluate_pair(const TargetFile& target, const std::string& generated,
                         const spec::WordLists& lists);

// Throws Error(kEmptyInput) without targets or systems. Pair failures are
// recorded in the report and never abort the run.
RunReport evaluate_run(const std::vector<TargetFile>& targets,
                       const std::vector<SystemOutputs>& systems, const spec::WordLists& lists,
                       unsigned jobs = 1);

std::string report_to_json(const RunReport& report);
std::string layer_report_to_json(const LayerReport& report);

}  // namespace dockspec::eval
