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

#include "punjabi_prep/term_list.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "punjabi_prep/term_set.hpp"

namespace punjabi_prep {
namespace {

constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

std::string_view TrimAscii(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::string DescribeForeign(std::string_view entry) {
  for (char32_t c : DecodeUtf8(entry)) {
    if (!IsGurmukhi(c)) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
      return std::string("non-Gurmukhi codepoint ") + buf + " in '" + std::string(entry) + "'";
    }
  }
  return "invalid entry '" + std::string(entry) + "'";
}

}  // namespace

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw Error(ErrorKind::kFileNotFound, path.string() + ": no such file");
  }
  if (std::filesystem::is_directory(path, ec)) {
    throw Error(ErrorKind::kIo, path.string() + ": is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, path.string() + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, path.string() + ": read failed");
  return std::move(buf).str();
}

TermListScan ScanTermList(std::string_view content) {
  TermListScan scan;
  if (content.starts_with(kUtf8Bom)) content.remove_prefix(kUtf8Bom.size());

  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view raw = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto bad = FirstInvalidUtf8(raw)) {
      scan.issues.push_back({line_no, ErrorKind::kInvalidEncoding,
                             "ill-formed UTF-8 at column byte " + std::to_string(*bad + 1)});
      continue;
    }
    const std::string_view line = TrimAscii(raw);
    if (line.empty() || line.front() == '#') continue;

    std::string entry = NormalizeNfc(line);
    auto term = Term::TryMake(entry);
    if (!term) {
      scan.issues.push_back({line_no, ErrorKind::kInvalidEntry, DescribeForeign(entry)});
      continue;
    }
    if (!seen.insert(entry).second) {
      ++scan.duplicate_count;
      continue;
    }
    scan.entries.push_back(std::move(*term));
  }
  scan.line_count = line_no;
  return scan;
}

TermListScan ScanTermListFile(const std::filesystem::path& path) {
  return ScanTermList(ReadFileBytes(path));
}

std::vector<Term> LoadTermListFile(const std::filesystem::path& path) {
  TermListScan scan = ScanTermListFile(path);
  if (!scan.ok()) {
    const TermListIssue& first = scan.issues.front();
    throw Error(first.kind,
                path.string() + ":" + std::to_string(first.line) + ": " + first.message,
                first.line);
  }
  return std::move(scan.entries);
}

}  // namespace punjabi_prep
