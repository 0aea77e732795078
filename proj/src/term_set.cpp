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

#include "punjabi_prep/term_set.hpp"

#include <utility>

namespace punjabi_prep {

TermSet::TermSet(std::vector<Term> terms) {
  entries_.reserve(terms.size());
  index_.reserve(terms.size());
  for (auto& t : terms) insert(std::move(t));
}

bool TermSet::insert(Term term) {
  if (!index_.insert(term.text()).second) return false;
  entries_.push_back(std::move(term));
  return true;
}

}  // namespace punjabi_prep
