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

namespace dockspec::util {

std::string_view trim(std::string_view s);
std::string_view trim_left(std::string_view s);
std::string_view trim_right(std::string_view s);

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

// Splits on any character in `separators`, dropping empty pieces.
std::vector<std::string> split_any(std::string_view s, std::string_view separators);

// Whitespace tokenization (space, tab, CR, LF, FF, VT).
std::vector<std::string> split_whitespace(std::string_view s);

bool starts_with_alpha(std::string_view s);
bool has_alpha(std::string_view s);
bool is_digits(std::string_view s);
bool is_digits_and_dots(std::string_view s);

bool looks_like_url(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace dockspec::util
