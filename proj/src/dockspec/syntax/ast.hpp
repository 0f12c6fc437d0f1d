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

#include <cstddef>
#include <string>
#include <vector>

#include "dockspec/syntax/dockerfile.hpp"

namespace dockspec::syntax {

struct TreeNode {
  std::string label;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

// Two-level Dockerfile tree: "dockerfile" root, one child per instruction
// labeled by kind; RUN children are shell statements labeled by command with
// argument leaves, other instructions carry one leaf per argument token (or
// per exec-form element). Comments are not represented.
struct DockerfileAst {
  TreeNode root;
};

DockerfileAst build_ast(const DockerfileDocument& doc);

std::size_t tree_size(const TreeNode& node);
inline std::size_t ast_size(const DockerfileAst& ast) { return tree_size(ast.root); }

std::string dump_ast_text(const DockerfileAst& ast);
std::string dump_ast_json(const DockerfileAst& ast);

}  // namespace dockspec::syntax
