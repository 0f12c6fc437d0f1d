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
#include <numeric>

#include "dockspec/error.hpp"
#include "dockspec/retrieval/retrieval.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::retrieval {
namespace {

std::vector<ScoredHit> top_k(const std::vector<double>& scores, std::size_t k,
                             const RetrievalIndex& index) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  k = std::min(k, order.size());
  auto better = [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    better);
  std::vector<ScoredHit> hits;
  hits.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& doc = index.documents[order[i]];
    hits.push_back({doc.id, scores[order[i]], doc.record.dockerfile});
  }
  return hits;
}

}  // namespace

FieldTexts render_spec_fields(const spec::DockerSpec& s) {
  FieldTexts out;
  out[0] = s.os;
  out[1] = std::string(spec::pkg_manager_name(s.pkg_manager));
  out[2] = util::join(std::vector<std::string>(s.dependencies.begin(), s.dependencies.end()), " ");
  for (std::size_t i = 0; i < std::size(spec::kBoolFields); ++i) {
    const auto& field = spec::kBoolFields[i];
    if (s.*field.member) out[3 + i] = std::string(field.name);
  }
  return out;
}

FieldTerms query_terms(const spec::DockerSpec& s) {
  const auto texts = render_spec_fields(s);
  FieldTerms terms;
  for (std::size_t f = 0; f < kFieldCount; ++f) terms[f] = util::split_whitespace(texts[f]);
  return terms;
}

std::size_t RetrievalIndex::document_frequency(std::size_t field, const std::string& term) const {
  auto it = postings[field].find(term);
  return it == postings[field].end() ? 0 : it->second.size();
}

RetrievalIndex build_index(std::vector<corpus::CorpusRecord> records, Bm25Params params) {
  if (records.empty()) throw Error(ErrorCode::kEmptyCorpus, "cannot index an empty corpus");
  RetrievalIndex index;
  index.params = params;
  index.documents.reserve(records.size());
  std::array<std::size_t, kFieldCount> total_length{};
  for (std::size_t id = 0; id < records.size(); ++id) {
    IndexedDocument doc;
    doc.id = id;
    doc.field_texts = render_spec_fields(records[id].spec);
    doc.record = std::move(records[id]);
    for (std::size_t f = 0; f < kFieldCount; ++f) {
      const auto terms = util::split_whitespace(doc.field_texts[f]);
      for (const auto& t : terms) ++doc.term_frequencies[f][t];
      doc.length[f] = terms.size();
      total_length[f] += terms.size();
      // Postings are appended in id order, so each list is sorted by doc.
      std::vector<std::string> distinct;
      for (const auto& [term, tf] : doc.term_frequencies[f]) distinct.push_back(term);
      std::sort(distinct.begin(), distinct.end());
      for (const auto& term : distinct)
        index.postings[f][term].push_back({id, doc.term_frequencies[f][term]});
    }
    index.documents.push_back(std::move(doc));
  }
  const auto n = static_cast<double>(index.documents.size());
  for (std::size_t f = 0; f < kFieldCount; ++f)
    index.average_length[f] = static_cast<double>(total_length[f]) / n;
  return index;
}

double bm25_idf(std::size_t n_docs, std::size_t df) {
  const double n = static_cast<double>(n_docs);
  const double d = static_cast<double>(df);
  return std::log(1.0 + (n - d + 0.5) / (d + 0.5));
}

namespace {

double term_weight(double idf, std::size_t tf, std::size_t len, double avgdl,
                   const Bm25Params& p) {
  const double t = static_cast<double>(tf);
  const double norm = avgdl > 0.0 ? static_cast<double>(len) / avgdl : 0.0;
  return idf * t * (p.k1 + 1.0) / (t + p.k1 * (1.0 - p.b + p.b * norm));
}

}  // namespace

double bm25_score(const FieldTerms& query, std::size_t doc, const RetrievalIndex& index) {
  const auto& d = index.documents.at(doc);
  double score = 0.0;
  for (std::size_t f = 0; f < kFieldCount; ++f) {
    for (const auto& term : query[f]) {
      auto it = d.term_frequencies[f].find(term);
      if (it == d.term_frequencies[f].end()) continue;
      const double idf = bm25_idf(index.size(), index.document_frequency(f, term));
      score += term_weight(idf, it->second, d.length[f], index.average_length[f], index.params);
    }
  }
  return score;
}

std::vector<ScoredHit> retrieve(const spec::DockerSpec& spec, std::size_t k,
                                const RetrievalIndex& index) {
  if (index.documents.empty()) throw Error(ErrorCode::kEmptyCorpus, "index is empty");
  const auto query = query_terms(spec);
  std::vector<double> scores(index.size(), 0.0);
  for (std::size_t f = 0; f < kFieldCount; ++f) {
    for (const auto& term : query[f]) {
      auto it = index.postings[f].find(term);
      if (it == index.postings[f].end()) continue;
      const double idf = bm25_idf(index.size(), it->second.size());
      for (const auto& p : it->second) {
        const auto& d = index.documents[p.doc];
        scores[p.doc] += term_weight(idf, p.tf, d.length[f], index.average_length[f],
                                     index.params);
      }
    }
  }
  return top_k(scores, k, index);
}

std::vector<ScoredHit> vector_retrieve(const spec::DockerSpec& spec, std::size_t k,
                                       const RetrievalIndex& index) {
  if (index.documents.empty()) throw Error(ErrorCode::kEmptyCorpus, "index is empty");
  const auto query = tfidf_vector(spec, index);
  std::vector<double> scores(index.size(), 0.0);
  for (std::size_t i = 0; i < index.size(); ++i)
    scores[i] = cosine(query, tfidf_vector(index.documents[i].record.spec, index));
  return top_k(scores, k, index);
}

}  // namespace dockspec::retrieval
