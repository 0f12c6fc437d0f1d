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

// Brute-force reference implementations used to check the optimized code.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/spec/docker_spec.hpp"
#include "dockspec/syntax/ast.hpp"

namespace oracle {

using dockspec::syntax::TreeNode;

// ---- trees --------------------------------------------------------------------

inline TreeNode random_tree(std::mt19937_64& rng, std::size_t max_nodes,
                            const std::vector<std::string>& labels) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_nodes);
  std::uniform_int_distribution<std::size_t> label_dist(0, labels.size() - 1);
  const std::size_t n = size_dist(rng);
  // Parent links and child order are built first, then materialized.
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent_dist(0, i - 1);
    auto& kids = children[parent_dist(rng)];
    std::uniform_int_distribution<std::size_t> pos_dist(0, kids.size());
    kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(pos_dist(rng)), i);
  }
  std::vector<std::string> node_labels(n);
  for (auto& l : node_labels) l = labels[label_dist(rng)];
  std::function<TreeNode(std::size_t)> make = [&](std::size_t i) {
    TreeNode node{node_labels[i], {}};
    for (std::size_t c : children[i]) node.children.push_back(make(c));
    return node;
  };
  return make(0);
}

namespace detail {

struct Flat {
  std::vector<std::string> labels;
  std::vector<int> parent;  // pre-order; -1 for the root
};

inline void flatten(const TreeNode& node, int parent, Flat& out) {
  const int me = static_cast<int>(out.labels.size());
  out.labels.push_back(node.label);
  out.parent.push_back(parent);
  for (const auto& c : node.children) flatten(c, me, out);
}

// Forest left after deleting the nodes in `mask`: nested shape string plus
// surviving labels in pre-order.
struct Residue {
  std::string shape;
  std::vector<std::string> labels;
};

inline Residue delete_nodes(const Flat& t, std::uint32_t mask) {
  const std::size_t n = t.labels.size();
  std::vector<std::vector<std::size_t>> kids(n);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (t.parent[i] < 0) roots.push_back(i);
    else kids[static_cast<std::size_t>(t.parent[i])].push_back(i);
  }
  Residue r;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    const bool kept = !(mask >> i & 1u);
    if (kept) {
      r.shape.push_back('(');
      r.labels.push_back(t.labels[i]);
    }
    for (std::size_t c : kids[i]) walk(c);
    if (kept) r.shape.push_back(')');
  };
  for (std::size_t root : roots) walk(root);
  return r;
}

}  // namespace detail

// Exhaustive search over canonical edit scripts: delete a node subset of a,
// relabel, then insert a node subset of b (the reverse of deleting it from
// b). Any script can be reordered into this form without extra cost.
inline std::size_t tree_edit_distance(const TreeNode& a, const TreeNode& b) {
  detail::Flat fa, fb;
  detail::flatten(a, -1, fa);
  detail::flatten(b, -1, fb);
  const std::size_t na = fa.labels.size();
  const std::size_t nb = fb.labels.size();
  std::vector<detail::Residue> rb;
  for (std::uint32_t mb = 0; mb < (1u << nb); ++mb) rb.push_back(detail::delete_nodes(fb, mb));
  std::size_t best = na + nb;
  for (std::uint32_t ma = 0; ma < (1u << na); ++ma) {
    const auto ra = detail::delete_nodes(fa, ma);
    const std::size_t del = static_cast<std::size_t>(__builtin_popcount(ma));
    for (std::uint32_t mb = 0; mb < (1u << nb); ++mb) {
      if (rb[mb].shape != ra.shape) continue;
      std::size_t cost = del + static_cast<std::size_t>(__builtin_popcount(mb));
      for (std::size_t i = 0; i < ra.labels.size(); ++i) cost += ra.labels[i] != rb[mb].labels[i];
      best = std::min(best, cost);
    }
  }
  return best;
}

// ---- BM25 -----------------------------------------------------------------------

inline std::vector<std::vector<std::string>> fields_of(const dockspec::spec::DockerSpec& s) {
  std::vector<std::vector<std::string>> f(10);
  f[0] = {s.os};
  f[1] = {std::string(dockspec::spec::pkg_manager_name(s.pkg_manager))};
  f[2] = std::vector<std::string>(s.dependencies.begin(), s.dependencies.end());
  const bool flags[] = {s.downloads_external, s.uses_env,    s.uses_arg,       s.uses_label,
                        s.uses_expose,        s.uses_cmd,    s.uses_entrypoint};
  const char* names[] = {"downloads_external", "uses_env",    "uses_arg",       "uses_label",
                         "uses_expose",        "uses_cmd",    "uses_entrypoint"};
  for (int i = 0; i < 7; ++i)
    if (flags[i]) f[3 + static_cast<std::size_t>(i)] = {names[i]};
  return f;
}

// Full scan: every statistic is recounted from the raw documents.
inline std::vector<double> bm25_scores(const std::vector<dockspec::spec::DockerSpec>& docs,
                                       const dockspec::spec::DockerSpec& query, double k1 = 1.2,
                                       double b = 0.75) {
  const double n = static_cast<double>(docs.size());
  std::vector<std::vector<std::vector<std::string>>> df_fields;
  for (const auto& d : docs) df_fields.push_back(fields_of(d));
  const auto q = fields_of(query);
  std::vector<double> scores(docs.size(), 0.0);
  for (std::size_t f = 0; f < 10; ++f) {
    double total_len = 0;
    for (const auto& d : df_fields) total_len += static_cast<double>(d[f].size());
    const double avgdl = total_len / n;
    for (const auto& term : q[f]) {
      double df = 0;
      for (const auto& d : df_fields)
        df += std::count(d[f].begin(), d[f].end(), term) > 0 ? 1 : 0;
      const double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
      for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto& terms = df_fields[i][f];
        const double tf = static_cast<double>(std::count(terms.begin(), terms.end(), term));
        if (tf == 0) continue;
        const double len = static_cast<double>(terms.size());
        scores[i] += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * (len / avgdl)));
      }
    }
  }
  return scores;
}

inline std::vector<std::size_t> ranking(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return scores[x] > scores[y]; });
  return order;
}

inline dockspec::spec::DockerSpec random_spec(std::mt19937_64& rng,
                                              const std::vector<std::string>& vocabulary) {
  static const std::vector<std::string> os = {"any", "alpine", "ubuntu", "ubuntu2004", "debian10",
                                              "centos7"};
  std::uniform_int_distribution<std::size_t> os_pick(0, os.size() - 1);
  std::uniform_int_distribution<std::size_t> vocab_pick(0, vocabulary.size() - 1);
  std::uniform_int_distribution<int> n_deps(0, 4);
  std::bernoulli_distribution coin(0.3);
  dockspec::spec::DockerSpec s;
  s.os = os[os_pick(rng)];
  const auto required = dockspec::spec::required_pkg_manager(s.os);
  s.pkg_manager = required ? *required : dockspec::spec::PkgManager::kAny;
  if (required && coin(rng)) s.pkg_manager = dockspec::spec::PkgManager::kAny;
  for (int i = n_deps(rng); i > 0; --i) s.dependencies.insert(vocabulary[vocab_pick(rng)]);
  s.downloads_external = coin(rng);
  s.uses_env = coin(rng);
  s.uses_arg = coin(rng);
  s.uses_label = coin(rng);
  s.uses_expose = coin(rng);
  s.uses_cmd = coin(rng);
  s.uses_entrypoint = coin(rng);
  return s;
}

// ---- statistics ---------------------------------------------------------------

// Two-sided exact Mann-Whitney p by enumerating every split of the pooled
// values; U comes from direct pair comparison.
inline double mann_whitney_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t n = pooled.size();
  const std::size_t na = a.size();
  auto twice_u = [&](std::uint32_t mask) {
    long long u2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1u) continue;
        u2 += pooled[i] > pooled[j] ? 2 : pooled[i] == pooled[j] ? 1 : 0;
      }
    }
    return u2;
  };
  const long long center = static_cast<long long>(na * (n - na));
  const long long observed = std::llabs(twice_u((1u << na) - 1) - center);
  double hits = 0, total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != na) continue;
    total += 1;
    if (std::llabs(twice_u(mask) - center) >= observed) hits += 1;
  }
  return hits / total;
}

inline double cliffs_delta(const std::vector<double>& a, const std::vector<double>& b) {
  long long d = 0;
  for (double x : a)
    for (double y : b) d += (x > y) - (x < y);
  return static_cast<double>(d) / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

}  // namespace oracle
