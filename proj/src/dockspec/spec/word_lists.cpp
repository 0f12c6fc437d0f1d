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

#include "dockspec/spec/word_lists.hpp"

#include <fstream>
#include <sstream>

#include "dockspec/error.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::spec {
namespace detail {
extern const char* const kDefaultOsWords;
extern const char* const kDefaultStopWords;
extern const char* const kDefaultDependencyWords;
}  // namespace detail

std::set<std::string> parse_word_list(std::string_view text) {
  std::set<std::string> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = util::trim(view);
    if (!view.empty()) words.insert(util::to_lower(view));
  }
  return words;
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read word list " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word_list(buf.str());
}

void check_word_lists(const WordLists& lists) {
  for (const auto& w : lists.os_words) {
    if (lists.stop_words.count(w))
      throw Error(ErrorCode::kInvalidArgument, "word '" + w + "' is both an OS and a stop word");
  }
}

const WordLists& default_word_lists() {
  static const WordLists lists = [] {
    WordLists l;
    l.os_words = parse_word_list(detail::kDefaultOsWords);
    l.stop_words = parse_word_list(detail::kDefaultStopWords);
    l.dependency_words = parse_word_list(detail::kDefaultDependencyWords);
    check_word_lists(l);
    return l;
  }();
  return lists;
}

WordLists load_word_lists(const std::optional<std::filesystem::path>& os_path,
                          const std::optional<std::filesystem::path>& stop_path,
                          const std::optional<std::filesystem::path>& dependency_path) {
  WordLists lists = default_word_lists();
  if (os_path) lists.os_words = load_word_list(*os_path);
  if (stop_path) lists.stop_words = load_word_list(*stop_path);
  if (dependency_path) lists.dependency_words = load_word_list(*dependency_path);
  check_word_lists(lists);
  return lists;
}

}  // namespace dockspec::spec
