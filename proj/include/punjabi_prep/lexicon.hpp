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

#ifndef PUNJABI_PREP_LEXICON_HPP_
#define PUNJABI_PREP_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "punjabi_prep/gurmukhi.hpp"
#include "punjabi_prep/term_set.hpp"

namespace punjabi_prep {

enum class LexiconKind { kDictionary, kGazetteer };

std::string_view LexiconKindName(LexiconKind kind);

// Dictionary or gazetteer word list. Immutable after construction.
class Lexicon {
 public:
  explicit Lexicon(LexiconKind kind, std::vector<Term> terms = {},
                   std::filesystem::path source_path = {});

  LexiconKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::filesystem::path& source_path() const noexcept { return source_path_; }
  const std::vector<Term>& entries() const noexcept { return terms_.entries(); }

  bool contains(std::string_view text) const noexcept { return terms_.contains(text); }

 private:
  LexiconKind kind_;
  TermSet terms_;
  std::filesystem::path source_path_;
};

Lexicon load_lexicon(const std::filesystem::path& path, LexiconKind kind);

inline bool lookup(const Term& term, const Lexicon& lex) noexcept {
  return lex.contains(term.view());
}

struct MatchPartition {
  std::vector<Term> dictionary_matched;
  std::vector<Term> gazetteer_matched;
  std::vector<Term> rejected;
  // Dictionary misses, i.e. gazetteer_matched and rejected interleaved in
  // input order. Only filled when requested.
  std::vector<Term> remaining;
};

// Dictionary first, gazetteer on a miss, rejected otherwise. Throws
// Error(kInvalidConfig) if the lexicon kinds are swapped.
MatchPartition match_terms(std::span<const Term> terms, const Lexicon& dict,
                           const Lexicon& gaz, bool keep_remaining = false);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_LEXICON_HPP_
