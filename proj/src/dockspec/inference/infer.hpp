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

#include <set>
#include <string>
#include <vector>

#include "dockspec/inference/image_reference.hpp"
#include "dockspec/spec/docker_spec.hpp"
#include "dockspec/spec/word_lists.hpp"
#include "dockspec/syntax/dockerfile.hpp"
#include "dockspec/syntax/shell.hpp"

namespace dockspec::inference {

// Step 1: first OS word among tag words, then name words. A match in the
// name gets the tag's numeric words appended ("debian" + "10" -> "debian10").
std::string infer_os(const ImageReference& ref, const spec::WordLists& lists);

// Name words that are neither OS nor stop words and start with a letter.
std::set<std::string> infer_from_dependencies(const ImageReference& ref,
                                              const spec::WordLists& lists);

// Words following "install" in a comment, minus stop words, OS words and
// punctuation. Empty when the comment does not mention installing.
std::vector<std::string> extract_comment_candidates(const syntax::CommentLine& comment,
                                                    const spec::WordLists& lists);

struct CommentScope {
  syntax::CommentLine comment;
  std::vector<std::string> candidate_dependencies;
  std::vector<syntax::ShellStatement> run_statements;
};

// One scope per comment: RUN instructions starting after the comment and
// before the next comment line or blank line.
std::vector<CommentScope> comment_scopes(const syntax::DockerfileDocument& doc,
                                         const spec::WordLists& lists);

std::set<std::string> infer_comment_dependencies(const syntax::DockerfileDocument& doc,
                                                 const spec::WordLists& lists);

struct InstructionFlags {
  bool uses_env = false;
  bool uses_arg = false;
  bool uses_label = false;
  bool uses_expose = false;
  bool uses_cmd = false;
  bool uses_entrypoint = false;

  bool operator==(const InstructionFlags&) const = default;
};

InstructionFlags infer_flags(const syntax::DockerfileDocument& doc);

spec::PkgManager infer_pkg_manager(const syntax::DockerfileDocument& doc, std::string_view os);

bool infer_downloads_external(const syntax::DockerfileDocument& doc);

// Full inference. Throws Error(kInferenceIncomplete) when the document has no
// single usable FROM, and propagates Error(kShellSyntax) from RUN bodies.
spec::DockerSpec infer_spec(const syntax::DockerfileDocument& doc, const spec::WordLists& lists);

// Inference for generated files, which carry no comments: every field is
// inferred as usual except dependencies, which become the subset of
// `required` found among installable arguments or FROM words.
spec::DockerSpec infer_generated_spec(const syntax::DockerfileDocument& doc,
                                      const std::set<std::string>& required,
                                      const spec::WordLists& lists);

// The single FROM of a document, split; throws Error(kInferenceIncomplete).
ImageReference single_from(const syntax::DockerfileDocument& doc);

}  // namespace dockspec::inference
