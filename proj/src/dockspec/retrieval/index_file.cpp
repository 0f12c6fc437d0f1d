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

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dockspec/error.hpp"
#include "dockspec/retrieval/retrieval.hpp"

namespace dockspec::retrieval {

using nlohmann::ordered_json;

std::string index_to_string(const RetrievalIndex& index) {
  ordered_json j;
  j["k1"] = index.params.k1;
  j["b"] = index.params.b;
  j["documents"] = ordered_json::array();
  for (const auto& doc : index.documents)
    j["documents"].push_back(ordered_json::parse(corpus::record_to_json(doc.record)));
  return std::string(kIndexMagic) + "\n" + j.dump() + "\n";
}

RetrievalIndex index_from_string(std::string_view text) {
  const auto nl = text.find('\n');
  if (nl == std::string_view::npos || text.substr(0, nl) != kIndexMagic)
    throw Error(ErrorCode::kFormat, "not a dockspec index (bad magic header)");
  ordered_json j;
  try {
    j = ordered_json::parse(text.substr(nl + 1));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("corrupt index body: ") + e.what());
  }
  if (!j.is_object() || !j.contains("documents") || !j["documents"].is_array() ||
      !j.contains("k1") || !j["k1"].is_number() || !j.contains("b") || !j["b"].is_number())
    throw Error(ErrorCode::kFormat, "index body needs k1, b and documents");
  std::vector<corpus::CorpusRecord> records;
  for (const auto& d : j["documents"]) records.push_back(corpus::record_from_json(d.dump()));
  return build_index(std::move(records), {j["k1"].get<double>(), j["b"].get<double>()});
}

void save_index(const RetrievalIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << index_to_string(index);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

RetrievalIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return index_from_string(buf.str());
}

}  // namespace dockspec::retrieval
