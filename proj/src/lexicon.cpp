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

#include "punjabi_prep/lexicon.hpp"

#include <string>
#include <utility>

#include "punjabi_prep/error.hpp"
#include "punjabi_prep/term_list.hpp"

namespace punjabi_prep {

std::string_view LexiconKindName(LexiconKind kind) {
  return kind == LexiconKind::kDictionary ? "dictionary" : "gazetteer";
}

Lexicon::Lexicon(LexiconKind kind, std::vector<Term> terms, std::filesystem::path source_path)
    : kind_(kind), terms_(std::move(terms)), source_path_(std::move(source_path)) {}

Lexicon load_lexicon(const std::filesystem::path& path, LexiconKind kind) {
  return Lexicon(kind, LoadTermListFile(path), path);
}

MatchPartition match_terms(std::span<const Term> terms, const Lexicon& dict, const Lexicon& gaz,
                           bool keep_remaining) {
  if (dict.kind() != LexiconKind::kDictionary || gaz.kind() != LexiconKind::kGazetteer) {
    throw Error(ErrorKind::kInvalidConfig, "match_terms expects a dictionary and a gazetteer");
  }
  MatchPartition p;
  for (const Term& t : terms) {
    if (lookup(t, dict)) {
      p.dictionary_matched.push_back(t);
      continue;
    }
    if (keep_remaining) p.remaining.push_back(t);
    if (lookup(t, gaz)) {
      p.gazetteer_matched.push_back(t);
    } else {
      p.rejected.push_back(t);
    }
  }
  return p;
}

}  // namespace punjabi_prep
