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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dockspec::syntax {

enum class InstructionKind {
  kFrom,
  kRun,
  kCmd,
  kEntrypoint,
  kCopy,
  kAdd,
  kEnv,
  kArg,
  kLabel,
  kExpose,
  kWorkdir,
  kUser,
  kVolume,
  kMaintainer,
  kOnbuild,
  kShell,
  kStopsignal,
  kHealthcheck,
};

std::string_view kind_name(InstructionKind kind);
std::optional<InstructionKind> kind_from_keyword(std::string_view keyword);

struct LineSpan {
  std::size_t start = 0;  // 1-based, inclusive
  std::size_t end = 0;

  bool operator==(const LineSpan&) const = default;
};

struct Instruction {
  InstructionKind kind = InstructionKind::kFrom;
  // Arguments with backslash continuations joined by a single space.
  std::string raw_arguments;
  LineSpan line_span;

  bool operator==(const Instruction&) const = default;
};

struct CommentLine {
  std::string text;  // without the leading '#', trimmed
  std::size_t line = 0;

  bool operator==(const CommentLine&) const = default;
};

struct DockerfileDocument {
  std::string raw_text;
  std::string content_hash;
  std::vector<Instruction> instructions;
  std::vector<CommentLine> comments;
  std::set<std::size_t> blank_lines;

  std::size_t from_count() const;
};

// Throws Error(kEmptyInput) when no instruction is present and
// Error(kMalformedInstruction) on a line without a known keyword.
DockerfileDocument parse_dockerfile(std::string_view text);

// Elements of a JSON exec-form argument list (`CMD ["a", "b"]`), or nullopt
// for shell form.
std::optional<std::vector<std::string>> exec_form(const Instruction& instruction);

// Comments and instructions in line order, one per line.
std::string serialize_dockerfile(const DockerfileDocument& doc);

}  // namespace dockspec::syntax
