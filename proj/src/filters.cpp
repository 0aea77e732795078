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

#include "punjabi_prep/filters.hpp"

#include <string>
#include <unordered_set>
#include <utility>

#include "punjabi_prep/term_list.hpp"

namespace punjabi_prep {

DedupResult dedup_terms(std::span<const Term> terms) {
  DedupResult result;
  std::unordered_set<std::string_view> seen;
  seen.reserve(terms.size());
  for (const Term& t : terms) {
    if (seen.insert(t.view()).second) {
      result.unique.push_back(t);
    } else {
      ++result.duplicate_count;
    }
  }
  return result;
}

StopList::StopList(std::vector<Term> terms, std::filesystem::path source_path)
    : terms_(std::move(terms)), source_path_(std::move(source_path)) {}

StopList load_stoplist(const std::filesystem::path& path) {
  return StopList(LoadTermListFile(path), path);
}

StopwordResult remove_stopwords(std::span<const Term> terms, const StopList& stops) {
  StopwordResult result;
  result.kept.reserve(terms.size());
  for (const Term& t : terms) {
    if (stops.contains(t)) {
      ++result.removed_count;
    } else {
      result.kept.push_back(t);
    }
  }
  return result;
}

}  // namespace punjabi_prep
