// Copyright 2026 The punjabi-prep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "punjabi_prep/error.hpp"

namespace punjabi_prep {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFileNotFound: return "FileNotFound";
    case ErrorKind::kInvalidEncoding: return "InvalidEncoding";
    case ErrorKind::kInvalidEntry: return "InvalidEntry";
    case ErrorKind::kInvalidTerm: return "InvalidTerm";
    case ErrorKind::kNotGurmukhi: return "NotGurmukhi";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kNotADirectory: return "NotADirectory";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kInvalidRatio: return "InvalidRatio";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kInvalidReport: return "InvalidReport";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(message), kind_(kind), line_(line) {}

}  // namespace punjabi_prep
