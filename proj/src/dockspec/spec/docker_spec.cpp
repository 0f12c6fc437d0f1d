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

#include "dockspec/spec/docker_spec.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

#include "dockspec/error.hpp"

namespace dockspec::spec {
namespace {

using nlohmann::ordered_json;

bool is_lower_alpha(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::kSchema, what); }

}  // namespace

std::string_view pkg_manager_name(PkgManager pm) {
  switch (pm) {
    case PkgManager::kApt: return "apt";
    case PkgManager::kApk: return "apk";
    case PkgManager::kYum: return "yum";
    case PkgManager::kAny: return "any";
  }
  return "any";
}

std::optional<PkgManager> pkg_manager_from_name(std::string_view name) {
  for (auto pm : {PkgManager::kApt, PkgManager::kApk, PkgManager::kYum, PkgManager::kAny})
    if (pkg_manager_name(pm) == name) return pm;
  return std::nullopt;
}

std::optional<PkgManager> required_pkg_manager(std::string_view os) {
  for (std::string_view p : {"ubuntu", "debian"})
    if (starts_with(os, p)) return PkgManager::kApt;
  if (starts_with(os, "alpine")) return PkgManager::kApk;
  for (std::string_view p : {"centos", "fedora", "rhel", "amazonlinux"})
    if (starts_with(os, p)) return PkgManager::kYum;
  return std::nullopt;
}

bool pkg_manager_coherent(std::string_view os, PkgManager pm) {
  if (pm == PkgManager::kAny) return true;
  auto required = required_pkg_manager(os);
  return !required || *required == pm;
}

bool is_valid_os_token(std::string_view os) {
  if (os.empty() || !is_lower_alpha(os.front())) return false;
  return std::all_of(os.begin(), os.end(), [](char c) { return is_lower_alpha(c) || is_digit(c); });
}

bool is_valid_dependency_word(std::string_view word) {
  if (word.empty() || !is_lower_alpha(word.front())) return false;
  return std::all_of(word.begin(), word.end(), [](char c) {
    return is_lower_alpha(c) || is_digit(c) || c == '.' || c == '_' || c == '+' || c == '-';
  });
}

std::vector<Violation> validate_spec(const DockerSpec& spec, const WordLists& lists) {
  std::vector<Violation> out;
  if (spec.os.empty()) {
    out.push_back({"os empty", "os must be a non-empty word"});
  } else if (!is_valid_os_token(spec.os)) {
    out.push_back({"os malformed", "os '" + spec.os + "' is not a lowercase token"});
  }
  if (!pkg_manager_coherent(spec.os, spec.pkg_manager)) {
    out.push_back({"pkg/os incoherent", "os '" + spec.os + "' cannot use package manager '" +
                                            std::string(pkg_manager_name(spec.pkg_manager)) + "'"});
  }
  for (const auto& dep : spec.dependencies) {
    if (lists.is_os(dep)) out.push_back({"dependency is an OS word", dep});
    if (lists.is_stop(dep)) out.push_back({"dependency is a stop word", dep});
    if (!is_valid_dependency_word(dep)) out.push_back({"dependency malformed", dep});
  }
  return out;
}

std::string serialize_spec(const DockerSpec& spec) {
  ordered_json j;
  j["os"] = spec.os;
  j["pkg_manager"] = std::string(pkg_manager_name(spec.pkg_manager));
  j["dependencies"] = ordered_json::array();
  for (const auto& d : spec.dependencies) j["dependencies"].push_back(d);
  for (const auto& f : kBoolFields) j[std::string(f.name)] = spec.*(f.member);
  return j.dump();
}

DockerSpec deserialize_spec(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kFieldNames), std::end(kFieldNames), key) == std::end(kFieldNames))
      schema_error("unknown field '" + key + "'");
  }
  for (auto name : kFieldNames) {
    if (!j.contains(std::string(name))) schema_error("missing field '" + std::string(name) + "'");
  }

  DockerSpec spec;
  const auto& os = j["os"];
  if (!os.is_string()) schema_error("field 'os' must be a string");
  spec.os = os.get<std::string>();
  if (!is_valid_os_token(spec.os)) schema_error("field 'os' must be a lowercase token");

  const auto& pm = j["pkg_manager"];
  if (!pm.is_string()) schema_error("field 'pkg_manager' must be a string");
  auto parsed_pm = pkg_manager_from_name(pm.get<std::string>());
  if (!parsed_pm) schema_error("field 'pkg_manager' must be one of apt, apk, yum, any");
  spec.pkg_manager = *parsed_pm;

  const auto& deps = j["dependencies"];
  if (!deps.is_array()) schema_error("field 'dependencies' must be an array");
  for (const auto& d : deps) {
    if (!d.is_string() || d.get<std::string>().empty())
      schema_error("dependencies must be non-empty strings");
    if (!spec.dependencies.insert(d.get<std::string>()).second)
      schema_error("duplicate dependency '" + d.get<std::string>() + "'");
  }

  for (const auto& f : kBoolFields) {
    const auto& v = j[std::string(f.name)];
    if (!v.is_boolean()) schema_error("field '" + std::string(f.name) + "' must be a boolean");
    spec.*(f.member) = v.get<bool>();
  }
  return spec;
}

}  // namespace dockspec::spec
