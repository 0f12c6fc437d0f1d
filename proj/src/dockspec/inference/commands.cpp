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

#include "dockspec/inference/commands.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "dockspec/util/strings.hpp"

namespace dockspec::inference {
namespace {

using syntax::ShellStatement;
using syntax::Word;

bool is_env_assignment(std::string_view w) {
  const auto eq = w.find('=');
  if (eq == std::string_view::npos || eq == 0) return false;
  if (!(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  return std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(eq), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_prefix_keyword(std::string_view w) {
  static constexpr std::array<std::string_view, 11> kKeywords{
      "then", "do", "else", "elif", "!", "{", "time", "exec", "nohup", "command", "env"};
  return std::find(kKeywords.begin(), kKeywords.end(), w) != kKeywords.end();
}

bool is_flag(std::string_view w) { return w.size() > 1 && w.front() == '-'; }
bool is_variable(std::string_view w) { return w.find('$') != std::string_view::npos; }

std::string basename_lower(std::string_view w) {
  const auto slash = w.rfind('/');
  return util::to_lower(slash == std::string_view::npos ? w : w.substr(slash + 1));
}

struct ToolRule {
  std::string_view command;
  PackageTool tool;
  std::array<std::string_view, 3> subcommands;
  std::array<std::string_view, 12> value_flags;
};

constexpr std::array<ToolRule, 7> kToolRules{{
    {"apt-get", PackageTool::kApt, {"install"}, {"-o", "-t", "-c", "--target-release", "--option"}},
    {"apt", PackageTool::kApt, {"install"}, {"-o", "-t", "-c", "--target-release", "--option"}},
    {"yum", PackageTool::kYum, {"install"}, {"-c", "--enablerepo", "--disablerepo", "--setopt", "--releasever", "--installroot"}},
    {"apk", PackageTool::kApk, {"add"}, {"-t", "--virtual", "-X", "--repository", "--repositories-file", "-p", "--root"}},
    {"pip", PackageTool::kPip, {"install"}, {"-r", "--requirement", "-c", "--constraint", "-i", "--index-url", "--extra-index-url", "-t", "--target", "-f", "--find-links", "--trusted-host"}},
    {"pip3", PackageTool::kPip, {"install"}, {"-r", "--requirement", "-c", "--constraint", "-i", "--index-url", "--extra-index-url", "-t", "--target", "-f", "--find-links", "--trusted-host"}},
    {"npm", PackageTool::kNpm, {"install", "i", "add"}, {"--prefix", "--registry", "-C"}},
}};

const ToolRule* find_rule(std::string_view name) {
  for (const auto& rule : kToolRules)
    if (rule.command == name) return &rule;
  return nullptr;
}

bool contains(const auto& array, std::string_view w) {
  return !w.empty() && std::find(array.begin(), array.end(), w) != array.end();
}

// Index of the first non-flag argument of `view` equal to `sub`, skipping
// values of flags in `value_flags`; nullopt if the first operand differs.
template <typename Flags>
std::optional<std::size_t> find_subcommand(const CommandView& view, const Flags& value_flags,
                                           const auto& subcommands) {
  for (std::size_t i = 0; i < view.args.size(); ++i) {
    const std::string& w = view.args[i]->text;
    if (is_flag(w)) {
      if (contains(value_flags, w)) ++i;
      continue;
    }
    if (contains(subcommands, util::to_lower(w))) return i;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> url_args(const CommandView& view, std::size_t from = 0) {
  std::vector<std::string> urls;
  for (std::size_t i = from; i < view.args.size(); ++i) {
    const std::string& w = view.args[i]->text;
    if (!is_flag(w) && util::looks_like_url(w)) urls.push_back(w);
  }
  return urls;
}

bool is_clone(const CommandView& view) {
  if (view.name != "git" && view.name != "hg") return false;
  static constexpr std::array<std::string_view, 1> kClone{"clone"};
  static constexpr std::array<std::string_view, 3> kGitValueFlags{"-C", "-c", "--git-dir"};
  return find_subcommand(view, kGitValueFlags, kClone).has_value();
}

// Download targets of a statement: URL arguments of curl/wget/git clone/
// hg clone. A statement whose command word is itself a URL (a clone source
// split off from its `git clone` by a stray `&&`) also counts.
std::vector<std::string> download_urls(const CommandView& view) {
  if (view.name == "curl" || view.name == "wget" || is_clone(view)) return url_args(view);
  if (view.word && util::looks_like_url(view.word->text)) return {view.word->text};
  return {};
}

std::string strip_version(std::string_view pkg) {
  const auto cut = pkg.find_first_of("=<>!~[;");
  std::string_view name = pkg.substr(0, cut);
  if (const auto at = name.rfind('@'); at != std::string_view::npos && at > 0)
    name = name.substr(0, at);
  if (const auto colon = name.find(':'); colon != std::string_view::npos)
    name = name.substr(0, colon);
  return std::string(name);
}

std::string url_final_segment(std::string_view url) {
  url = url.substr(0, url.find_first_of("?#"));
  while (!url.empty() && url.back() == '/') url.remove_suffix(1);
  const auto slash = url.find_last_of("/:");
  return std::string(slash == std::string_view::npos ? url : url.substr(slash + 1));
}

void add_with_words(std::set<std::string>& out, const std::string& value) {
  if (value.empty()) return;
  out.insert(value);
  for (auto& w : util::split_any(value, "-_.")) out.insert(std::move(w));
}

void add_url(std::set<std::string>& out, std::string_view url) {
  const std::string lower = util::to_lower(url);
  out.insert(lower);
  add_with_words(out, url_final_segment(lower));
}

bool is_vcs_reference(std::string_view w) {
  for (std::string_view p : {"git+", "hg+", "svn+", "bzr+", "github:", "gitlab:", "bitbucket:"})
    if (w.rfind(p, 0) == 0) return true;
  return util::looks_like_url(w);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

CommandView effective_command(const ShellStatement& statement) {
  std::vector<const Word*> words;
  words.reserve(statement.arguments.size() + 1);
  words.push_back(&statement.command);
  for (const auto& a : statement.arguments) words.push_back(&a);

  std::size_t k = 0;
  bool after_sudo = false;
  while (k + 1 < words.size()) {
    const std::string& w = words[k]->text;
    if (is_env_assignment(w) || is_prefix_keyword(w)) {
      ++k;
    } else if (w == "sudo") {
      after_sudo = true;
      ++k;
    } else if (after_sudo && is_flag(w)) {
      ++k;
    } else {
      break;
    }
  }

  CommandView view;
  view.name = basename_lower(words[k]->text);
  view.word = words[k];
  view.arg_offset = k;
  view.args.assign(words.begin() + static_cast<std::ptrdiff_t>(k) + 1, words.end());

  if ((view.name == "python" || view.name == "python3" || view.name == "python2") &&
      view.args.size() >= 2 && view.args[0]->text == "-m" &&
      (view.args[1]->text == "pip" || view.args[1]->text == "pip3")) {
    view.name = "pip";
    view.args.erase(view.args.begin(), view.args.begin() + 2);
    view.arg_offset += 2;
  }
  return view;
}

std::optional<InstallCall> install_call(const CommandView& view) {
  const ToolRule* rule = find_rule(view.name);
  if (!rule) return std::nullopt;
  auto sub = find_subcommand(view, rule->value_flags, rule->subcommands);
  if (!sub) return std::nullopt;

  InstallCall call{rule->tool, *sub, {}};
  for (std::size_t i = *sub + 1; i < view.args.size(); ++i) {
    const std::string& w = view.args[i]->text;
    if (is_flag(w)) {
      if (contains(rule->value_flags, w)) ++i;
      continue;
    }
    call.operands.push_back(i);
  }
  return call;
}

std::vector<syntax::ShellStatement> run_statements(const syntax::Instruction& run) {
  if (auto elements = syntax::exec_form(run)) {
    if (elements->empty()) return {};
    ShellStatement st;
    st.command = Word{(*elements)[0], (*elements)[0]};
    for (std::size_t i = 1; i < elements->size(); ++i)
      st.arguments.push_back(Word{(*elements)[i], (*elements)[i]});
    return {st};
  }
  return syntax::parse_shell(run.raw_arguments);
}

std::set<std::string> extract_installable_args(std::span<const ShellStatement> statements) {
  std::set<std::string> out;
  for (const auto& st : statements) {
    const CommandView view = effective_command(st);
    if (auto call = install_call(view)) {
      for (std::size_t idx : call->operands) {
        const std::string& w = view.args[idx]->text;
        if (is_variable(w)) continue;
        if (util::looks_like_url(w) || is_vcs_reference(w)) {
          add_url(out, w);
          continue;
        }
        const std::string lower = util::to_lower(w);
        out.insert(lower);
        add_with_words(out, strip_version(lower));
      }
    }
    for (const auto& url : download_urls(view)) {
      if (!is_variable(url)) add_url(out, url);
    }
  }
  return out;
}

std::set<spec::PkgManager> os_package_managers(const ShellStatement& statement) {
  std::set<spec::PkgManager> out;
  if (auto call = install_call(effective_command(statement))) {
    switch (call->tool) {
      case PackageTool::kApt: out.insert(spec::PkgManager::kApt); break;
      case PackageTool::kApk: out.insert(spec::PkgManager::kApk); break;
      case PackageTool::kYum: out.insert(spec::PkgManager::kYum); break;
      default: break;
    }
  }
  return out;
}

bool downloads_external(const ShellStatement& statement) {
  const CommandView view = effective_command(statement);

  // (i) a link given to a download command
  if ((view.name == "curl" || view.name == "wget" || is_clone(view)) && !url_args(view).empty())
    return true;

  // (ii) and (iii) for package managers
  if (auto call = install_call(view)) {
    for (std::size_t idx : call->operands) {
      const std::string lower = util::to_lower(view.args[idx]->text);
      switch (call->tool) {
        case PackageTool::kPip:
        case PackageTool::kNpm:
          if (is_vcs_reference(lower)) return true;
          break;
        case PackageTool::kApt:
          if (ends_with(lower, ".deb")) return true;
          break;
        case PackageTool::kYum:
          if (ends_with(lower, ".rpm")) return true;
          break;
        case PackageTool::kApk:
          if (ends_with(lower, ".apk")) return true;
          break;
      }
    }
  }

  // (iii) low-level package tools on package files
  if (view.name == "dpkg") {
    for (const auto* a : view.args) {
      const std::string& w = a->text;
      if (w == "--install" || (w.size() > 1 && w[0] == '-' && w[1] != '-' &&
                               w.find('i') != std::string::npos))
        return true;
    }
  }
  if (view.name == "rpm") {
    for (const auto* a : view.args) {
      const std::string& w = a->text;
      if (w == "--install" || w == "--upgrade" ||
          (w.size() > 1 && w[0] == '-' && w[1] != '-' && w.find_first_of("iU") != std::string::npos))
        return true;
    }
  }
  if (view.name == "gdebi") return true;
  return false;
}

}  // namespace dockspec::inference
