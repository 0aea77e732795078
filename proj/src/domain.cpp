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

#include "punjabi_prep/domain.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace punjabi_prep {
namespace {

struct NamedDomain {
  DomainLabel::Kind kind;
  std::string_view name;
};

constexpr std::array<NamedDomain, 5> kNamedDomains = {{
    {DomainLabel::Kind::kAgriculture, "agriculture"},
    {DomainLabel::Kind::kEntertainment, "entertainment"},
    {DomainLabel::Kind::kHealth, "health"},
    {DomainLabel::Kind::kPolitics, "politics"},
    {DomainLabel::Kind::kSports, "sports"},
}};

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

DomainLabel::DomainLabel(Kind kind) : kind_(kind) {
  for (const auto& d : kNamedDomains) {
    if (d.kind == kind) name_ = std::string(d.name);
  }
}

DomainLabel DomainLabel::Other(std::string name) {
  DomainLabel label;
  label.kind_ = Kind::kOther;
  label.name_ = std::move(name);
  return label;
}

DomainLabel DomainLabel::FromName(std::string_view name) {
  const std::string lower = AsciiLower(name);
  for (const auto& d : kNamedDomains) {
    if (d.name == lower) return DomainLabel(d.kind);
  }
  return Other(std::string(name));
}

}  // namespace punjabi_prep
