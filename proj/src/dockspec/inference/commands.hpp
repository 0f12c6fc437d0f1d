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

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dockspec/spec/docker_spec.hpp"
#include "dockspec/syntax/dockerfile.hpp"
#include "dockspec/syntax/shell.hpp"

namespace dockspec::inference {

// The command a statement actually runs, after skipping env assignments,
// `sudo`, and shell keywords such as `then`/`do`.
struct CommandView {
  std::string name;  // lowercase basename, "pip" for `python -m pip`
  const syntax::Word* word = nullptr;  // the command word as written
  std::vector<const syntax::Word*> args;
  std::size_t arg_offset = 0;  // index of args[0] in statement.arguments
};

CommandView effective_command(const syntax::ShellStatement& statement);

enum class PackageTool { kApt, kYum, kApk, kPip, kNpm };

// A package-manager install call (`apt-get install`, `yum install`,
// `apk add`, `pip install`, `npm install`). Indices refer to CommandView::args.
struct InstallCall {
  PackageTool tool;
  std::size_t subcommand = 0;
  std::vector<std::size_t> operands;  // package arguments in original order
};

std::optional<InstallCall> install_call(const CommandView& view);

// Shell statements of a RUN instruction; exec-form RUN yields one statement.
std::vector<syntax::ShellStatement> run_statements(const syntax::Instruction& run);

// Arguments of install and download statements: package names (with and
// without version pins) and URL final segments, each also split into words
// on '-', '_' and '.'. Flags and $VARIABLE references are excluded.
std::set<std::string> extract_installable_args(std::span<const syntax::ShellStatement> statements);

// Package managers among apt/apk/yum whose install subcommand is invoked.
std::set<spec::PkgManager> os_package_managers(const syntax::ShellStatement& statement);

// URL download (wget, curl, git/hg clone), pip/npm install from a URL or VCS
// reference, or a low-level package tool run on a local package file.
bool downloads_external(const syntax::ShellStatement& statement);

}  // namespace dockspec::inference
