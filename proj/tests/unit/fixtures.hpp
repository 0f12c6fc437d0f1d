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

#include <filesystem>
#include <string>

#include "dockspec/corpus/corpus.hpp"

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(DOCKSPEC_FIXTURES_DIR) / name;
}

inline std::string fixture_text(const std::string& name) {
  return dockspec::corpus::read_file(fixture_path(name));
}
