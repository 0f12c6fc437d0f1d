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

#include "dockspec/syntax/dockerfile.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "dockspec/error.hpp"
#include "dockspec/util/sha1.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::syntax {
namespace {

constexpr std::array<std::pair<InstructionKind, std::string_view>, 18> kKeywords{{
    {InstructionKind::kFrom, "FROM"},
    {InstructionKind::kRun, "RUN"},
    {InstructionKind::kCmd, "CMD"},
    {InstructionKind::kEntrypoint, "ENTRYPOINT"},
    {InstructionKind::kCopy, "COPY"},
    {InstructionKind::kAdd, "ADD"},
    {InstructionKind::kEnv, "ENV"},
    {InstructionKind::kArg, "ARG"},
    {InstructionKind::kLabel, "LABEL"},
    {InstructionKind::kExpose, "EXPOSE"},
    {InstructionKind::kWorkdir, "WORKDIR"},
    {InstructionKind::kUser, "USER"},
    {InstructionKind::kVolume, "VOLUME"},
    {InstructionKind::kMaintainer, "MAINTAINER"},
    {InstructionKind::kOnbuild, "ONBUILD"},
    {InstructionKind::kShell, "SHELL"},
    {InstructionKind::kStopsignal, "STOPSIGNAL"},
    {InstructionKind::kHealthcheck, "HEALTHCHECK"},
}};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

// True when the line ends with an odd number of backslashes (ignoring
// trailing whitespace); strips them from `piece`.
bool strip_continuation(std::string_view& piece) {
  std::string_view t = util::trim_right(piece);
  std::size_t slashes = 0;
  while (slashes < t.size() && t[t.size() - 1 - slashes] == '\\') ++slashes;
  if (slashes % 2 == 0) return false;
  piece = util::trim_right(t.substr(0, t.size() - 1));
  return true;
}

void append_piece(std::string& joined, std::string_view piece) {
  piece = util::trim(piece);
  if (piece.empty()) return;
  if (!joined.empty()) joined.push_back(' ');
  joined.append(piece);
}

}  // namespace

std::string_view kind_name(InstructionKind kind) {
  for (const auto& [k, name] : kKeywords)
    if (k == kind) return name;
  return "UNKNOWN";
}

std::optional<InstructionKind> kind_from_keyword(std::string_view keyword) {
  const std::string upper = util::to_upper(keyword);
  for (const auto& [k, name] : kKeywords)
    if (name == upper) return k;
  return std::nullopt;
}

std::size_t DockerfileDocument::from_count() const {
  return static_cast<std::size_t>(
      std::count_if(instructions.begin(), instructions.end(),
                    [](const Instruction& i) { return i.kind == InstructionKind::kFrom; }));
}

DockerfileDocument parse_dockerfile(std::string_view text) {
  DockerfileDocument doc;
  doc.raw_text = std::string(text);
  doc.content_hash = util::sha1_hex(text);

  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  const auto lines = split_lines(text);

  std::optional<Instruction> open;  // instruction awaiting continuation lines
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    std::string_view stripped = util::trim(line);

    if (stripped.empty()) {
      doc.blank_lines.insert(line_no);
      continue;
    }
    if (stripped.front() == '#') {
      doc.comments.push_back({std::string(util::trim(stripped.substr(1))), line_no});
      continue;
    }

    if (open) {
      bool more = strip_continuation(line);
      append_piece(open->raw_arguments, line);
      open->line_span.end = line_no;
      if (!more) {
        doc.instructions.push_back(std::move(*open));
        open.reset();
      }
      continue;
    }

    std::size_t kw_end = 0;
    while (kw_end < stripped.size() && stripped[kw_end] != ' ' && stripped[kw_end] != '\t')
      ++kw_end;
    std::string_view keyword = stripped.substr(0, kw_end);
    std::string_view rest = stripped.substr(kw_end);
    if (!keyword.empty() && keyword.back() == '\\' && rest.empty()) {
      keyword.remove_suffix(1);
      rest = "\\";
    }
    auto kind = kind_from_keyword(keyword);
    if (!kind) {
      throw Error(ErrorCode::kMalformedInstruction,
                  "line " + std::to_string(line_no) + ": unknown instruction '" +
                      std::string(keyword) + "'");
    }
    Instruction inst;
    inst.kind = *kind;
    inst.line_span = {line_no, line_no};
    bool more = strip_continuation(rest);
    append_piece(inst.raw_arguments, rest);
    if (more) {
      open = std::move(inst);
    } else {
      doc.instructions.push_back(std::move(inst));
    }
  }
  if (open) doc.instructions.push_back(std::move(*open));

  if (doc.instructions.empty()) throw Error(ErrorCode::kEmptyInput, "no instructions");
  return doc;
}

std::optional<std::vector<std::string>> exec_form(const Instruction& instruction) {
  std::string_view args = instruction.raw_arguments;
  if (args.empty() || args.front() != '[') return std::nullopt;
  auto parsed = nlohmann::json::parse(args, nullptr, /*allow_exceptions=*/false);
  if (!parsed.is_array()) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& element : parsed) {
    if (!element.is_string()) return std::nullopt;
    out.push_back(element.get<std::string>());
  }
  return out;
}

std::string serialize_dockerfile(const DockerfileDocument& doc) {
  std::map<std::size_t, std::string> by_line;
  for (const auto& c : doc.comments) by_line[c.line] = "# " + c.text;
  for (const auto& inst : doc.instructions) {
    std::string line(kind_name(inst.kind));
    if (!inst.raw_arguments.empty()) line += " " + inst.raw_arguments;
    by_line[inst.line_span.start] = std::move(line);
  }
  std::ostringstream out;
  for (const auto& [line, text] : by_line) out << text << '\n';
  return out.str();
}

}  // namespace dockspec::syntax
