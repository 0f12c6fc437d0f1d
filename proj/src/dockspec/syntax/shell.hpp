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

#include <string>
#include <string_view>
#include <vector>

namespace dockspec::syntax {

enum class Connector { kAnd, kOr, kSemicolon, kPipe, kNewline, kBackground, kNone };

std::string_view connector_token(Connector c);

struct Word {
  std::string text;  // value after quote removal
  std::string raw;   // source spelling, quotes included

  bool operator==(const Word&) const = default;
};

struct Redirect {
  std::string op;  // e.g. ">", ">>", "2>", ">&", "<<<"
  Word target;

  bool operator==(const Redirect&) const = default;
};

struct ShellStatement {
  Word command;
  std::vector<Word> arguments;
  std::vector<Redirect> redirects;
  Connector connector_to_next = Connector::kNone;

  bool operator==(const ShellStatement&) const = default;
};

// Splits a shell-form script into simple statements on &&, ||, ;, |, & and
// newlines. Quotes, escapes, $(...), ${...} and backticks are respected; their
// content is kept opaque inside the enclosing word. Unbalanced quotes,
// here-documents, and empty statements between connectors throw
// Error(kShellSyntax).
std::vector<ShellStatement> parse_shell(std::string_view script);

// Inverse of parse_shell up to whitespace: statements joined by their
// connectors, redirections placed after the arguments.
std::string render_statements(const std::vector<ShellStatement>& statements);
std::string render_statement(const ShellStatement& statement);

}  // namespace dockspec::syntax
