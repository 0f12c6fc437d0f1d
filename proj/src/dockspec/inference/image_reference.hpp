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
#include <string>
#include <string_view>
#include <vector>

namespace dockspec::inference {

// A FROM image split into name and tag, each broken into lowercase words
// on '-' and '_'. Only the last path segment of the name contributes words.
struct ImageReference {
  std::string name;
  std::optional<std::string> tag;
  std::vector<std::string> name_words;
  std::vector<std::string> tag_words;

  bool operator==(const ImageReference&) const = default;
};

// `from_args` is the raw argument text of a FROM instruction; flags such as
// --platform and a trailing "AS <stage>" are ignored. Throws
// Error(kMalformedFrom) when no image name can be extracted.
ImageReference split_image_reference(std::string_view from_args);

}  // namespace dockspec::inference
