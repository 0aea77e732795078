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

#ifndef PUNJABI_PREP_FILTERS_HPP_
#define PUNJABI_PREP_FILTERS_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "punjabi_prep/gurmukhi.hpp"
#include "punjabi_prep/term_set.hpp"

namespace punjabi_prep {

struct DedupResult {
  std::vector<Term> unique;
  std::size_t duplicate_count = 0;
};

// Keeps the first occurrence of every term, in first-occurrence order.
DedupResult dedup_terms(std::span<const Term> terms);

// Immutable after construction; safe to share between threads.
class StopList {
 public:
  StopList() = default;
  StopList(std::vector<Term> terms, std::filesystem::path source_path = {});

  bool contains(const Term& term) const noexcept { return terms_.contains(term.view()); }
  bool contains(std::string_view text) const noexcept { return terms_.contains(text); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::filesystem::path& source_path() const noexcept { return source_path_; }
  // Distinct entries in file order.
  const std::vector<Term>& entries() const noexcept { return terms_.entries(); }

 private:
  TermSet terms_;
  std::filesystem::path source_path_;
};

StopList load_stoplist(const std::filesystem::path& path);

struct StopwordResult {
  std::vector<Term> kept;
  std::size_t removed_count = 0;
};

StopwordResult remove_stopwords(std::span<const Term> terms, const StopList& stops);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_FILTERS_HPP_
