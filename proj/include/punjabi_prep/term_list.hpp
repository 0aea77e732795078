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

// Line-oriented term list files, shared by stop lists, dictionaries and
// gazetteers:
//
//   - UTF-8, an optional leading BOM is skipped;
//   - LF or CRLF line endings;
//   - surrounding whitespace is trimmed, blank lines are skipped;
//   - lines whose first non-blank character is '#' are comments;
//   - every other line is one term, NFC-normalized, Gurmukhi only.

#ifndef PUNJABI_PREP_TERM_LIST_HPP_
#define PUNJABI_PREP_TERM_LIST_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "punjabi_prep/error.hpp"
#include "punjabi_prep/gurmukhi.hpp"

namespace punjabi_prep {

struct TermListIssue {
  std::size_t line = 0;  // 1-based
  ErrorKind kind = ErrorKind::kInvalidEntry;
  std::string message;
};

struct TermListScan {
  std::vector<Term> entries;  // distinct, first-occurrence order
  std::size_t line_count = 0;
  std::size_t duplicate_count = 0;
  std::vector<TermListIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
};

// Scans the whole content and records every problem instead of stopping at
// the first one.
TermListScan ScanTermList(std::string_view content);

// Throws kFileNotFound / kIo if the file can't be read. Content problems
// are reported in the returned scan.
TermListScan ScanTermListFile(const std::filesystem::path& path);

// Like ScanTermListFile but throws the first issue as an Error carrying
// its line number.
std::vector<Term> LoadTermListFile(const std::filesystem::path& path);

// Whole-file read; kFileNotFound if missing, kIo otherwise.
std::string ReadFileBytes(const std::filesystem::path& path);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_TERM_LIST_HPP_
