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
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/spec/docker_spec.hpp"

namespace dockspec::retrieval {

inline constexpr std::size_t kFieldCount = std::size(spec::kFieldNames);

using FieldTexts = std::array<std::string, kFieldCount>;
using FieldTerms = std::array<std::vector<std::string>, kFieldCount>;

// os and pkg_manager verbatim, sorted dependencies space-joined, each true
// flag as its own field name, false flags empty.
FieldTexts render_spec_fields(const spec::DockerSpec& spec);

// Whitespace tokens of each rendered field.
FieldTerms query_terms(const spec::DockerSpec& spec);

struct IndexedDocument {
  std::size_t id = 0;
  corpus::CorpusRecord record;
  FieldTexts field_texts;
  std::array<std::unordered_map<std::string, std::size_t>, kFieldCount> term_frequencies;
  std::array<std::size_t, kFieldCount> length{};
};

struct Posting {
  std::size_t doc = 0;
  std::size_t tf = 0;
};

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

struct RetrievalIndex {
  Bm25Params params;
  std::vector<IndexedDocument> documents;
  std::array<std::unordered_map<std::string, std::vector<Posting>>, kFieldCount> postings;
  std::array<double, kFieldCount> average_length{};

  std::size_t size() const { return documents.size(); }
  std::size_t document_frequency(std::size_t field, const std::string& term) const;
};

struct ScoredHit {
  std::size_t doc_id = 0;
  double score = 0.0;
  std::string dockerfile;
};

// Document ids follow record order. Throws Error(kEmptyCorpus).
RetrievalIndex build_index(std::vector<corpus::CorpusRecord> records, Bm25Params params = {});

double bm25_idf(std::size_t n_docs, std::size_t df);

// Sum over fields and query terms of the Okapi BM25 term weight.
double bm25_score(const FieldTerms& query, std::size_t doc, const RetrievalIndex& index);

// Disjunctive field query. Hits are ordered by descending score, then
// ascending id; k larger than the corpus returns every document.
std::vector<ScoredHit> retrieve(const spec::DockerSpec& spec, std::size_t k,
                                const RetrievalIndex& index);

// TF-IDF cosine ranking over field-prefixed terms ("dependencies:tomcat"), a
// lexical stand-in for sentence embeddings. Same ordering rules as retrieve.
std::vector<ScoredHit> vector_retrieve(const spec::DockerSpec& spec, std::size_t k,
                                       const RetrievalIndex& index);

// Sparse TF-IDF vector of a spec against the index's document frequencies.
std::unordered_map<std::string, double> tfidf_vector(const spec::DockerSpec& spec,
                                                     const RetrievalIndex& index);

double cosine(const std::unordered_map<std::string, double>& a,
              const std::unordered_map<std::string, double>& b);

// Versioned index file: a magic first line followed by JSON holding the
// parameters and documents. Postings are rebuilt on load.
inline constexpr std::string_view kIndexMagic = "DOCKSPEC-INDEX 1";

void save_index(const RetrievalIndex& index, const std::filesystem::path& path);
std::string index_to_string(const RetrievalIndex& index);
RetrievalIndex load_index(const std::filesystem::path& path);
RetrievalIndex index_from_string(std::string_view text);

}  // namespace dockspec::retrieval
