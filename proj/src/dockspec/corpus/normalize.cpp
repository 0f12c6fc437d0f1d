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

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"
#include "dockspec/inference/commands.hpp"
#include "dockspec/syntax/shell.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::corpus {
namespace {

using syntax::ShellStatement;
using syntax::Word;

// Flags (and their values) keep their relative order and precede the
// lexicographically sorted packages.
void sort_packages(ShellStatement& st) {
  const auto view = inference::effective_command(st);
  const auto call = inference::install_call(view);
  if (!call || call->operands.size() < 2) return;

  const std::size_t first = view.arg_offset + call->subcommand + 1;
  std::vector<bool> is_operand(st.arguments.size(), false);
  for (std::size_t idx : call->operands) is_operand[view.arg_offset + idx] = true;

  std::vector<Word> rest;
  std::vector<Word> packages;
  for (std::size_t i = first; i < st.arguments.size(); ++i)
    (is_operand[i] ? packages : rest).push_back(std::move(st.arguments[i]));
  std::stable_sort(packages.begin(), packages.end(),
                   [](const Word& a, const Word& b) { return a.text < b.text; });

  st.arguments.resize(first);
  for (auto& w : rest) st.arguments.push_back(std::move(w));
  for (auto& w : packages) st.arguments.push_back(std::move(w));
}

std::string normalize_run(const std::string& script) {
  std::vector<ShellStatement> statements;
  try {
    statements = syntax::parse_shell(script);
  } catch (const Error&) {
    return script;
  }
  for (auto& st : statements) {
    sort_packages(st);
    if (st.connector_to_next == syntax::Connector::kNewline)
      st.connector_to_next = syntax::Connector::kSemicolon;
  }
  return syntax::render_statements(statements);
}

bool is_marker_at(std::string_view text, std::size_t pos) {
  if (text.compare(pos, kNewlineMarker.size(), kNewlineMarker) != 0) return false;
  const bool left = pos == 0 || text[pos - 1] == ' ' || text[pos - 1] == '\n';
  const std::size_t after = pos + kNewlineMarker.size();
  const bool right = after == text.size() || text[after] == ' ' || text[after] == '\n';
  return left && right;
}

}  // namespace

std::string normalize_for_training(const syntax::DockerfileDocument& doc) {
  std::string out;
  for (const auto& inst : doc.instructions) {
    std::string args = inst.raw_arguments;
    if (inst.kind == syntax::InstructionKind::kRun && !syntax::exec_form(inst) && !args.empty())
      args = normalize_run(args);
    if (!out.empty()) out.push_back(' ');
    out.append(kind_name(inst.kind));
    if (!args.empty()) {
      out.push_back(' ');
      out.append(args);
    }
    out.push_back(' ');
    out.append(kNewlineMarker);
  }
  return out;
}

std::string denormalize(std::string_view normalized) {
  std::string out;
  std::size_t line_start = 0;
  for (std::size_t pos = 0; pos < normalized.size(); ++pos) {
    if (normalized[pos] != '<' || !is_marker_at(normalized, pos)) continue;
    out.append(util::trim(normalized.substr(line_start, pos - line_start)));
    out.push_back('\n');
    pos += kNewlineMarker.size() - 1;
    line_start = pos + 1;
  }
  auto tail = util::trim(normalized.substr(std::min(line_start, normalized.size())));
  if (!tail.empty()) {
    out.append(tail);
    out.push_back('\n');
  }
  return out;
}

std::size_t token_length(std::string_view text) { return util::split_whitespace(text).size(); }

}  // namespace dockspec::corpus
