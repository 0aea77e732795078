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

#ifndef PUNJABI_PREP_DOMAIN_HPP_
#define PUNJABI_PREP_DOMAIN_HPP_

#include <compare>
#include <string>
#include <string_view>

namespace punjabi_prep {

// Corpus class of a document. The five news domains map to corpus
// subdirectories of the same (lowercase) name; anything else is kOther
// and keeps its directory name.
class DomainLabel {
 public:
  enum class Kind { kAgriculture, kEntertainment, kHealth, kPolitics, kSports, kOther };

  DomainLabel() = default;
  explicit DomainLabel(Kind kind);
  static DomainLabel Other(std::string name);

  // Case-insensitive for the five named domains.
  static DomainLabel FromName(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  // "agriculture", ..., or the verbatim kOther name.
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const DomainLabel& a, const DomainLabel& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const DomainLabel& a,
                                          const DomainLabel& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  Kind kind_ = Kind::kOther;
  std::string name_;
};

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_DOMAIN_HPP_
