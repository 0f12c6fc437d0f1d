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
#include <map>
#include <set>

#include "json.hpp"

#include "dockspec/error.hpp"
#include "dockspec/eval/eval.hpp"

namespace dockspec::eval {

AdherenceReport adherence(const spec::DockerSpec& target, const spec::DockerSpec& obtained) {
  AdherenceReport r;
  r.scores[0] = target.os == obtained.os ? 1.0 : 0.0;
  r.scores[1] = target.pkg_manager == obtained.pkg_manager ? 1.0 : 0.0;
  if (target.dependencies.empty()) {
    r.scores[2] = 1.0;
  } else {
    std::size_t met = 0;
    for (const auto& d : target.dependencies) met += obtained.dependencies.count(d);
    r.scores[2] = static_cast<double>(met) / static_cast<double>(target.dependencies.size());
  }
  for (std::size_t i = 0; i < std::size(spec::kBoolFields); ++i) {
    const auto member = spec::kBoolFields[i].member;
    r.scores[3 + i] = target.*member == obtained.*member ? 1.0 : 0.0;
  }
  return r;
}

namespace {

using NGram = std::vector<std::string>;

std::map<NGram, std::size_t> ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
  std::map<NGram, std::size_t> counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    ++counts[NGram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                   tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  return counts;
}

}  // namespace

double bleu4(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  if (candidate.empty()) throw Error(ErrorCode::kEmptyCandidate, "BLEU candidate is empty");
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto cand = ngram_counts(candidate, n);
    const auto ref = ngram_counts(reference, n);
    std::size_t total = 0;
    std::size_t matched = 0;
    for (const auto& [gram, count] : cand) {
      total += count;
      auto it = ref.find(gram);
      if (it != ref.end()) matched += std::min(count, it->second);
    }
    const double precision = matched == 0 ? 1.0 / (2.0 * c)
                                          : static_cast<double>(matched) / static_cast<double>(total);
    log_sum += std::log(precision);
  }
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum / 4.0);
}

LayerReport layer_match(const std::vector<std::string>& original,
                        const std::vector<std::string>& generated,
                        std::string_view original_digest, std::string_view generated_digest) {
  if (original.empty()) throw Error(ErrorCode::kEmptyManifest, "original manifest has no layers");
  const std::set<std::string> orig(original.begin(), original.end());
  const std::set<std::string> gen(generated.begin(), generated.end());
  std::size_t shared = 0;
  for (const auto& d : orig) shared += gen.count(d);
  LayerReport r;
  r.matching_layer_ratio = static_cast<double>(shared) / static_cast<double>(orig.size());
  r.digest_equal = !original_digest.empty() && original_digest == generated_digest;
  if (r.digest_equal && r.matching_layer_ratio < 1.0)
    throw Error(ErrorCode::kInvalidArgument, "equal image digests but differing layers");
  return r;
}

LayerManifest parse_layer_manifest(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("manifest is not JSON: ") + e.what());
  }
  LayerManifest m;
  const nlohmann::json* layers = &j;
  if (j.is_object()) {
    if (j.contains("image")) {
      if (!j["image"].is_string()) throw Error(ErrorCode::kFormat, "manifest 'image' must be a string");
      m.image_digest = j["image"].get<std::string>();
    }
    if (!j.contains("layers")) throw Error(ErrorCode::kFormat, "manifest object needs 'layers'");
    layers = &j["layers"];
  }
  if (!layers->is_array()) throw Error(ErrorCode::kFormat, "manifest layers must be a list");
  for (const auto& d : *layers) {
    if (!d.is_string()) throw Error(ErrorCode::kFormat, "layer digests must be strings");
    m.layers.push_back(d.get<std::string>());
  }
  return m;
}

LayerReport layer_match(const LayerManifest& original, const LayerManifest& generated) {
  if (original.image_digest && generated.image_digest)
    return layer_match(original.layers, generated.layers, *original.image_digest,
                       *generated.image_digest);
  LayerReport r = layer_match(original.layers, generated.layers, "", "");
  r.digest_equal = original.layers == generated.layers;
  return r;
}

std::string layer_report_to_json(const LayerReport& report) {
  nlohmann::ordered_json j;
  j["digest_equal"] = report.digest_equal;
  j["matching_layer_ratio"] = report.matching_layer_ratio;
  return j.dump(2);
}

}  // namespace dockspec::eval
