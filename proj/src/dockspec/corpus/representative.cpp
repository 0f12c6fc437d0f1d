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
#include <numeric>
#include <set>

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::corpus {
namespace {

using TokenSet = std::set<std::string>;

TokenSet tokens_of(const syntax::Instruction& inst) {
  auto words = util::split_whitespace(inst.raw_arguments);
  return TokenSet(words.begin(), words.end());
}

double jaccard(const TokenSet& a, const TokenSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& t : a) common += b.count(t);
  const std::size_t uni = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

struct Member {
  std::vector<syntax::InstructionKind> kinds;
  std::vector<TokenSet> tokens;
};

}  // namespace

double instruction_jaccard(const syntax::Instruction& a, const syntax::Instruction& b) {
  if (a.kind != b.kind) {
    throw Error(ErrorCode::kKindMismatch, "cannot compare " + std::string(kind_name(a.kind)) +
                                              " with " + std::string(kind_name(b.kind)));
  }
  return jaccard(tokens_of(a), tokens_of(b));
}

std::vector<double> representative_scores(const SpecCluster& cluster) {
  const std::size_t m = cluster.members.size();
  std::vector<double> scores(m, 0.0);
  if (m <= 1) {
    std::fill(scores.begin(), scores.end(), 1.0);
    return scores;
  }

  // Scores are accumulated in content-hash order so they are bit-identical
  // under any permutation of the members.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cluster.members[x].provenance.content_hash < cluster.members[y].provenance.content_hash;
  });

  std::vector<Member> members(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& inst : cluster.members[i].dockerfile.instructions) {
      members[i].kinds.push_back(inst.kind);
      members[i].tokens.push_back(tokens_of(inst));
    }
  }

  for (std::size_t a : order) {
    const Member& A = members[a];
    if (A.kinds.empty()) continue;
    double total = 0.0;
    for (std::size_t i = 0; i < A.kinds.size(); ++i) {
      double across = 0.0;
      for (std::size_t b : order) {
        if (b == a) continue;
        const Member& B = members[b];
        double best = 0.0;
        for (std::size_t j = 0; j < B.kinds.size(); ++j)
          if (B.kinds[j] == A.kinds[i]) best = std::max(best, jaccard(A.tokens[i], B.tokens[j]));
        across += best;
      }
      total += across / static_cast<double>(m - 1);
    }
    scores[a] = total / static_cast<double>(A.kinds.size());
  }
  return scores;
}

std::size_t select_representative(const SpecCluster& cluster) {
  if (cluster.members.empty()) throw Error(ErrorCode::kInvalidArgument, "empty cluster");
  const auto scores = representative_scores(cluster);
  std::size_t best = 0;
  for (std::size_t i = 1; i < cluster.members.size(); ++i) {
    const auto& cand = cluster.members[i];
    const auto& cur = cluster.members[best];
    if (scores[i] != scores[best]) {
      if (scores[i] > scores[best]) best = i;
      continue;
    }
    const auto n_cand = cand.dockerfile.instructions.size();
    const auto n_cur = cur.dockerfile.instructions.size();
    if (n_cand != n_cur) {
      if (n_cand < n_cur) best = i;
      continue;
    }
    if (cand.provenance.content_hash < cur.provenance.content_hash) best = i;
  }
  return best;
}

}  // namespace dockspec::corpus
