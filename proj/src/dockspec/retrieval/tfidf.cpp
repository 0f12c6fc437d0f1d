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

#include <cmath>

#include "dockspec/retrieval/retrieval.hpp"

namespace dockspec::retrieval {

// Smoothed idf, ln((1 + N) / (1 + df)) + 1, so terms present in every
// document still carry weight.
std::unordered_map<std::string, double> tfidf_vector(const spec::DockerSpec& spec,
                                                     const RetrievalIndex& index) {
  const auto terms = query_terms(spec);
  const double n = static_cast<double>(index.size());
  std::unordered_map<std::string, double> tf;
  for (std::size_t f = 0; f < kFieldCount; ++f)
    for (const auto& t : terms[f]) tf[std::string(spec::kFieldNames[f]) + ":" + t] += 1.0;

  std::unordered_map<std::string, double> vec;
  for (std::size_t f = 0; f < kFieldCount; ++f) {
    for (const auto& t : terms[f]) {
      const std::string key = std::string(spec::kFieldNames[f]) + ":" + t;
      if (vec.count(key)) continue;
      const double df = static_cast<double>(index.document_frequency(f, t));
      vec[key] = tf[key] * (std::log((1.0 + n) / (1.0 + df)) + 1.0);
    }
  }
  return vec;
}

double cosine(const std::unordered_map<std::string, double>& a,
              const std::unordered_map<std::string, double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [k, v] : a) {
    na += v * v;
    auto it = b.find(k);
    if (it != b.end()) dot += v * it->second;
  }
  for (const auto& [k, v] : b) nb += v * v;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace dockspec::retrieval
