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

#include "dockspec/syntax/ast.hpp"

#include <sstream>

#include "json.hpp"

#include "dockspec/syntax/shell.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::syntax {
namespace {

TreeNode leaf(std::string label) { return TreeNode{std::move(label), {}}; }

void dump_text(const TreeNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << node.label << '\n';
  for (const auto& child : node.children) dump_text(child, depth + 1, out);
}

nlohmann::ordered_json to_json(const TreeNode& node) {
  nlohmann::ordered_json j;
  j["label"] = node.label;
  j["children"] = nlohmann::ordered_json::array();
  for (const auto& child : node.children) j["children"].push_back(to_json(child));
  return j;
}

}  // namespace

DockerfileAst build_ast(const DockerfileDocument& doc) {
  DockerfileAst ast;
  ast.root.label = "dockerfile";
  for (const auto& inst : doc.instructions) {
    TreeNode node{std::string(kind_name(inst.kind)), {}};
    if (auto elements = exec_form(inst)) {
      for (auto& e : *elements) node.children.push_back(leaf(std::move(e)));
    } else if (inst.kind == InstructionKind::kRun) {
      for (const auto& st : parse_shell(inst.raw_arguments)) {
        TreeNode stmt{st.command.text, {}};
        for (const auto& arg : st.arguments) stmt.children.push_back(leaf(arg.text));
        node.children.push_back(std::move(stmt));
      }
    } else {
      for (auto& token : util::split_whitespace(inst.raw_arguments))
        node.children.push_back(leaf(std::move(token)));
    }
    ast.root.children.push_back(std::move(node));
  }
  return ast;
}

std::size_t tree_size(const TreeNode& node) {
  std::size_t n = 1;
  for (const auto& child : node.children) n += tree_size(child);
  return n;
}

std::string dump_ast_text(const DockerfileAst& ast) {
  std::ostringstream out;
  dump_text(ast.root, 0, out);
  return out.str();
}

std::string dump_ast_json(const DockerfileAst& ast) { return to_json(ast.root).dump(2); }

}  // namespace dockspec::syntax
