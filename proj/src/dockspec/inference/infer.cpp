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

#include "dockspec/inference/infer.hpp"

#include <algorithm>
#include <limits>

#include "dockspec/error.hpp"
#include "dockspec/inference/commands.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::inference {
namespace {

using syntax::DockerfileDocument;
using syntax::InstructionKind;
using syntax::ShellStatement;

constexpr std::string_view kEdgePunctuation = ".,;:!?()[]{}\"'`*<>";

std::string_view strip_edges(std::string_view w) {
  while (!w.empty() && kEdgePunctuation.find(w.front()) != std::string_view::npos)
    w.remove_prefix(1);
  while (!w.empty() && kEdgePunctuation.find(w.back()) != std::string_view::npos)
    w.remove_suffix(1);
  return w;
}

bool is_install_keyword(std::string_view w) {
  return w == "install" || w == "installs" || w == "installing" || w == "installed";
}

std::vector<ShellStatement> all_run_statements(const DockerfileDocument& doc) {
  std::vector<ShellStatement> out;
  for (const auto& inst : doc.instructions) {
    if (inst.kind != InstructionKind::kRun) continue;
    auto stmts = run_statements(inst);
    out.insert(out.end(), std::make_move_iterator(stmts.begin()),
               std::make_move_iterator(stmts.end()));
  }
  return out;
}

void set_common_fields(const DockerfileDocument& doc, const ImageReference& ref,
                       const spec::WordLists& lists, spec::DockerSpec& spec) {
  spec.os = infer_os(ref, lists);
  spec.pkg_manager = infer_pkg_manager(doc, spec.os);
  spec.downloads_external = infer_downloads_external(doc);
  const InstructionFlags flags = infer_flags(doc);
  spec.uses_env = flags.uses_env;
  spec.uses_arg = flags.uses_arg;
  spec.uses_label = flags.uses_label;
  spec.uses_expose = flags.uses_expose;
  spec.uses_cmd = flags.uses_cmd;
  spec.uses_entrypoint = flags.uses_entrypoint;
}

}  // namespace

std::string infer_os(const ImageReference& ref, const spec::WordLists& lists) {
  for (const auto& w : ref.tag_words)
    if (lists.is_os(w)) return w;
  for (const auto& w : ref.name_words) {
    if (!lists.is_os(w)) continue;
    std::string os = w;
    for (const auto& t : ref.tag_words) {
      if (!util::is_digits_and_dots(t)) continue;
      for (char c : t)
        if (c != '.') os.push_back(c);
    }
    return os;
  }
  return "any";
}

std::set<std::string> infer_from_dependencies(const ImageReference& ref,
                                              const spec::WordLists& lists) {
  std::set<std::string> deps;
  for (const auto& w : ref.name_words) {
    if (lists.is_os(w) || lists.is_stop(w) || !util::starts_with_alpha(w)) continue;
    if (spec::is_valid_dependency_word(w)) deps.insert(w);
  }
  return deps;
}

std::vector<std::string> extract_comment_candidates(const syntax::CommentLine& comment,
                                                    const spec::WordLists& lists) {
  std::vector<std::string> out;
  bool after_install = false;
  for (const auto& token : util::split_any(comment.text, " \t,/")) {
    const std::string word = util::to_lower(strip_edges(token));
    if (word.empty()) continue;
    if (is_install_keyword(word)) {
      after_install = true;
      continue;
    }
    if (!after_install) continue;
    if (lists.is_stop(word) || lists.is_os(word)) continue;
    if (!spec::is_valid_dependency_word(word)) continue;
    if (std::find(out.begin(), out.end(), word) == out.end()) out.push_back(word);
  }
  return out;
}

std::vector<CommentScope> comment_scopes(const DockerfileDocument& doc,
                                         const spec::WordLists& lists) {
  std::vector<CommentScope> scopes;
  for (std::size_t ci = 0; ci < doc.comments.size(); ++ci) {
    const auto& comment = doc.comments[ci];
    std::size_t end = std::numeric_limits<std::size_t>::max();
    if (ci + 1 < doc.comments.size()) end = doc.comments[ci + 1].line;
    if (auto blank = doc.blank_lines.upper_bound(comment.line); blank != doc.blank_lines.end())
      end = std::min(end, *blank);

    CommentScope scope{comment, extract_comment_candidates(comment, lists), {}};
    for (const auto& inst : doc.instructions) {
      if (inst.kind != InstructionKind::kRun) continue;
      if (inst.line_span.start <= comment.line || inst.line_span.start >= end) continue;
      auto stmts = run_statements(inst);
      scope.run_statements.insert(scope.run_statements.end(),
                                  std::make_move_iterator(stmts.begin()),
                                  std::make_move_iterator(stmts.end()));
    }
    scopes.push_back(std::move(scope));
  }
  return scopes;
}

std::set<std::string> infer_comment_dependencies(const DockerfileDocument& doc,
                                                 const spec::WordLists& lists) {
  std::set<std::string> deps;
  for (const auto& scope : comment_scopes(doc, lists)) {
    if (scope.candidate_dependencies.empty() || scope.run_statements.empty()) continue;
    const auto installable = extract_installable_args(scope.run_statements);
    for (const auto& candidate : scope.candidate_dependencies)
      if (installable.count(candidate)) deps.insert(candidate);
  }
  return deps;
}

InstructionFlags infer_flags(const DockerfileDocument& doc) {
  InstructionFlags flags;
  for (const auto& inst : doc.instructions) {
    switch (inst.kind) {
      case InstructionKind::kEnv: flags.uses_env = true; break;
      case InstructionKind::kArg: flags.uses_arg = true; break;
      case InstructionKind::kLabel: flags.uses_label = true; break;
      case InstructionKind::kExpose: flags.uses_expose = true; break;
      case InstructionKind::kCmd: flags.uses_cmd = true; break;
      case InstructionKind::kEntrypoint: flags.uses_entrypoint = true; break;
      default: break;
    }
  }
  return flags;
}

spec::PkgManager infer_pkg_manager(const DockerfileDocument& doc, std::string_view os) {
  std::set<spec::PkgManager> seen;
  for (const auto& st : all_run_statements(doc)) {
    auto managers = os_package_managers(st);
    seen.insert(managers.begin(), managers.end());
  }
  if (seen.size() != 1) return spec::PkgManager::kAny;
  const spec::PkgManager pm = *seen.begin();
  return spec::pkg_manager_coherent(os, pm) ? pm : spec::PkgManager::kAny;
}

bool infer_downloads_external(const DockerfileDocument& doc) {
  const auto statements = all_run_statements(doc);
  return std::any_of(statements.begin(), statements.end(),
                     [](const ShellStatement& st) { return downloads_external(st); });
}

ImageReference single_from(const DockerfileDocument& doc) {
  const syntax::Instruction* from = nullptr;
  for (const auto& inst : doc.instructions) {
    if (inst.kind != InstructionKind::kFrom) continue;
    if (from) throw Error(ErrorCode::kInferenceIncomplete, "multi-stage Dockerfile");
    from = &inst;
  }
  if (!from) throw Error(ErrorCode::kInferenceIncomplete, "no FROM instruction");
  try {
    return split_image_reference(from->raw_arguments);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInferenceIncomplete, e.what());
  }
}

spec::DockerSpec infer_spec(const DockerfileDocument& doc, const spec::WordLists& lists) {
  const ImageReference ref = single_from(doc);
  spec::DockerSpec spec;
  set_common_fields(doc, ref, lists, spec);
  spec.dependencies = infer_from_dependencies(ref, lists);
  for (const auto& d : infer_comment_dependencies(doc, lists)) spec.dependencies.insert(d);
  return spec;
}

spec::DockerSpec infer_generated_spec(const DockerfileDocument& doc,
                                      const std::set<std::string>& required,
                                      const spec::WordLists& lists) {
  const ImageReference ref = single_from(doc);
  spec::DockerSpec spec;
  set_common_fields(doc, ref, lists, spec);

  const auto statements = all_run_statements(doc);
  std::set<std::string> present = extract_installable_args(statements);
  present.insert(ref.name_words.begin(), ref.name_words.end());
  present.insert(ref.tag_words.begin(), ref.tag_words.end());
  for (const auto& dep : required)
    if (present.count(dep)) spec.dependencies.insert(dep);
  return spec;
}

}  // namespace dockspec::inference
