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

#include "json.hpp"

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"

namespace dockspec::corpus {

using nlohmann::ordered_json;

std::string record_to_json(const CorpusRecord& record) {
  ordered_json j;
  j["spec"] = ordered_json::parse(spec::serialize_spec(record.spec));
  j["dockerfile"] = record.dockerfile;
  j["sha1"] = record.sha1;
  j["source"] = record.source;
  return j.dump();
}

CorpusRecord record_from_json(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("corpus line is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("spec") || !j.contains("dockerfile") ||
      !j["dockerfile"].is_string()) {
    throw Error(ErrorCode::kFormat, "corpus line needs 'spec' and 'dockerfile'");
  }
  CorpusRecord record;
  record.spec = spec::deserialize_spec(j["spec"].dump());
  record.dockerfile = j["dockerfile"].get<std::string>();
  if (j.contains("sha1") && j["sha1"].is_string()) record.sha1 = j["sha1"].get<std::string>();
  if (j.contains("source") && j["source"].is_string())
    record.source = j["source"].get<std::string>();
  return record;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<CorpusRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& r : records) out << record_to_json(r) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::vector<CorpusRecord> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::vector<CorpusRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(record_from_json(line));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace dockspec::corpus
