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

#ifndef PUNJABI_PREP_TERM_SET_HPP_
#define PUNJABI_PREP_TERM_SET_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "punjabi_prep/gurmukhi.hpp"

namespace punjabi_prep {

struct TransparentStringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Exact-match set of terms with hashed lookup. Entries keep their
// first-insertion order for iteration.
class TermSet {
 public:
  TermSet() = default;
  explicit TermSet(std::vector<Term> terms);

  // Returns false if the term was already present.
  bool insert(Term term);

  bool contains(std::string_view text) const noexcept {
    return index_.find(text) != index_.end();
  }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Term>& entries() const noexcept { return entries_; }

 private:
  std::vector<Term> entries_;
  std::unordered_set<std::string, TransparentStringHash, std::equal_to<>> index_;
};

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_TERM_SET_HPP_
