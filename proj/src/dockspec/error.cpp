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

#include "dockspec/error.hpp"

namespace dockspec {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMalformedInstruction: return "MalformedInstruction";
    case ErrorCode::kShellSyntax: return "ShellSyntaxError";
    case ErrorCode::kMalformedFrom: return "MalformedFrom";
    case ErrorCode::kInferenceIncomplete: return "InferenceIncomplete";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kTooFewEntries: return "TooFewEntries";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyCandidate: return "EmptyCandidate";
    case ErrorCode::kEmptyManifest: return "EmptyManifest";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kFormat: return "FormatError";
  }
  return "Unknown";
}

}  // namespace dockspec
