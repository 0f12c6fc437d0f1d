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
#include <vector>

#include "dockspec/eval/eval.hpp"

namespace dockspec::eval {
namespace {

using syntax::TreeNode;

// Post-order view: labels, leftmost-leaf indices, and keyroots.
struct Flat {
  std::vector<const std::string*> labels;
  std::vector<std::size_t> leftmost;
  std::vector<std::size_t> keyroots;
};

std::size_t flatten(const TreeNode& node, Flat& out) {
  std::size_t first_leaf = static_cast<std::size_t>(-1);
  for (const auto& child : node.children) {
    const std::size_t l = flatten(child, out);
    if (first_leaf == static_cast<std::size_t>(-1)) first_leaf = l;
  }
  const std::size_t index = out.labels.size();
  out.labels.push_back(&node.label);
  out.leftmost.push_back(first_leaf == static_cast<std::size_t>(-1) ? index : first_leaf);
  return out.leftmost.back();
}

Flat make_flat(const TreeNode& root) {
  Flat f;
  flatten(root, f);
  // A keyroot is the highest node for each distinct leftmost leaf.
  std::vector<bool> seen(f.labels.size(), false);
  for (std::size_t i = f.labels.size(); i-- > 0;) {
    if (!seen[f.leftmost[i]]) {
      seen[f.leftmost[i]] = true;
      f.keyroots.push_back(i);
    }
  }
  std::sort(f.keyroots.begin(), f.keyroots.end());
  return f;
}

}  // namespace

std::size_t tree_edit_distance(const TreeNode& a, const TreeNode& b) {
  const Flat A = make_flat(a);
  const Flat B = make_flat(b);
  const std::size_t n = A.labels.size();
  const std::size_t m = B.labels.size();
  std::vector<std::vector<std::size_t>> td(n, std::vector<std::size_t>(m, 0));
  std::vector<std::vector<std::size_t>> fd(n + 1, std::vector<std::size_t>(m + 1, 0));

  for (std::size_t i : A.keyroots) {
    for (std::size_t j : B.keyroots) {
      const std::size_t li = A.leftmost[i];
      const std::size_t lj = B.leftmost[j];
      // fd[x][y] is the forest distance between A[li..li+x-1] and B[lj..lj+y-1].
      const std::size_t rows = i - li + 1;
      const std::size_t cols = j - lj + 1;
      fd[0][0] = 0;
      for (std::size_t x = 1; x <= rows; ++x) fd[x][0] = fd[x - 1][0] + 1;
      for (std::size_t y = 1; y <= cols; ++y) fd[0][y] = fd[0][y - 1] + 1;
      for (std::size_t x = 1; x <= rows; ++x) {
        const std::size_t ai = li + x - 1;
        for (std::size_t y = 1; y <= cols; ++y) {
          const std::size_t bj = lj + y - 1;
          const std::size_t del = fd[x - 1][y] + 1;
          const std::size_t ins = fd[x][y - 1] + 1;
          if (A.leftmost[ai] == li && B.leftmost[bj] == lj) {
            const std::size_t rel = fd[x - 1][y - 1] + (*A.labels[ai] == *B.labels[bj] ? 0 : 1);
            fd[x][y] = std::min({del, ins, rel});
            td[ai][bj] = fd[x][y];
          } else {
            const std::size_t px = A.leftmost[ai] - li;
            const std::size_t py = B.leftmost[bj] - lj;
            fd[x][y] = std::min({del, ins, fd[px][py] + td[ai][bj]});
          }
        }
      }
    }
  }
  return td[n - 1][m - 1];
}

DistanceReport distance(const TreeNode& a, const TreeNode& b) {
  DistanceReport r;
  r.raw = tree_edit_distance(a, b);
  r.size_a = syntax::tree_size(a);
  r.size_b = syntax::tree_size(b);
  r.normalized = static_cast<double>(r.raw) / static_cast<double>(r.size_a + r.size_b);
  return r;
}

double normalized_distance(const TreeNode& a, const TreeNode& b) { return distance(a, b).normalized; }

}  // namespace dockspec::eval
