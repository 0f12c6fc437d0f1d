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

#include "dockspec/inference/image_reference.hpp"

#include "dockspec/error.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::inference {

ImageReference split_image_reference(std::string_view from_args) {
  std::string image;
  for (auto& token : util::split_whitespace(from_args)) {
    if (token.rfind("--", 0) == 0) continue;
    image = std::move(token);
    break;
  }
  if (auto at = image.find('@'); at != std::string::npos) image.resize(at);

  ImageReference ref;
  const std::size_t last_slash = image.rfind('/');
  const std::size_t colon = image.rfind(':');
  if (colon != std::string::npos && (last_slash == std::string::npos || colon > last_slash)) {
    ref.name = image.substr(0, colon);
    std::string tag = image.substr(colon + 1);
    if (!tag.empty()) ref.tag = std::move(tag);
  } else {
    ref.name = image;
  }
  if (ref.name.empty()) throw Error(ErrorCode::kMalformedFrom, "FROM without image name");

  const std::size_t seg = ref.name.rfind('/');
  const std::string last = seg == std::string::npos ? ref.name : ref.name.substr(seg + 1);
  ref.name_words = util::split_any(util::to_lower(last), "-_");
  if (ref.name_words.empty())
    throw Error(ErrorCode::kMalformedFrom, "FROM image name '" + ref.name + "' has no words");
  if (ref.tag) {
    ref.tag_words = util::split_any(util::to_lower(*ref.tag), "-_");
    if (ref.tag_words.empty()) ref.tag.reset();
  }
  return ref;
}

}  // namespace dockspec::inference
