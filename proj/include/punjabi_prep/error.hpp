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

#ifndef PUNJABI_PREP_ERROR_HPP_
#define PUNJABI_PREP_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace punjabi_prep {

enum class ErrorKind {
  kFileNotFound,
  kInvalidEncoding,
  kInvalidEntry,
  kInvalidTerm,
  kNotGurmukhi,
  kIo,
  kNotADirectory,
  kEmptyCorpus,
  kInvalidRatio,
  kInvalidConfig,
  kInvalidReport,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure surfaced by the library. `line()` is 1-based and only set
// for errors tied to a specific line of a resource or report file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_ERROR_HPP_
