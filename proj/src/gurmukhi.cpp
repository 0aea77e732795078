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

#include "punjabi_prep/gurmukhi.hpp"

#include <unicode/errorcode.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>
#include <utility>

#include "punjabi_prep/error.hpp"
#include "punjabi_prep/term_list.hpp"

namespace punjabi_prep {
namespace {

// Calls fn(codepoint) for every codepoint; ill-formed sequences are passed
// as a negative value.
template <typename Fn>
void ForEachCodepoint(std::string_view text, Fn&& fn) {
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    fn(c);
  }
}

const icu::Normalizer2& Nfc() {
  icu::ErrorCode status;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (status.isFailure() || nfc == nullptr) {
    throw Error(ErrorKind::kIo, std::string("ICU NFC data unavailable: ") + status.errorName());
  }
  return *nfc;
}

}  // namespace

std::string_view CharClassName(CharClass c) {
  switch (c) {
    case CharClass::kGurmukhi: return "GURMUKHI";
    case CharClass::kSeparator: return "SEPARATOR";
    case CharClass::kUseless: return "USELESS";
  }
  return "USELESS";
}

CharClass classify_char(char32_t ch) noexcept {
  if (IsGurmukhi(ch)) return CharClass::kGurmukhi;
  switch (ch) {
    case U' ':
    case U'\t':
    case U'\r':
    case U'\n':
    case U',':
    case kDanda:
    case kDoubleDanda:
      return CharClass::kSeparator;
    default:
      return CharClass::kUseless;
  }
}

std::optional<std::size_t> FirstInvalidUtf8(std::string_view text) noexcept {
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return static_cast<std::size_t>(start);
  }
  return std::nullopt;
}

bool IsValidUtf8(std::string_view text) noexcept { return !FirstInvalidUtf8(text); }

void AppendUtf8(std::string& out, char32_t ch) {
  char buf[U8_MAX_LENGTH];
  std::int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, static_cast<UChar32>(ch));
  out.append(buf, static_cast<std::size_t>(n));
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  ForEachCodepoint(text, [&](UChar32 c) { out.push_back(c < 0 ? U'\uFFFD' : static_cast<char32_t>(c)); });
  return out;
}

std::string EncodeUtf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 3);
  for (char32_t c : codepoints) AppendUtf8(out, c);
  return out;
}

std::string NormalizeNfc(std::string_view text) {
  if (auto bad = FirstInvalidUtf8(text)) {
    throw Error(ErrorKind::kInvalidEncoding,
                "ill-formed UTF-8 at byte offset " + std::to_string(*bad));
  }
  const icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
  const icu::Normalizer2& nfc = Nfc();
  icu::ErrorCode status;
  if (nfc.isNormalized(input, status) && status.isSuccess()) return std::string(text);
  status.reset();
  const icu::UnicodeString normalized = nfc.normalize(input, status);
  if (status.isFailure()) {
    throw Error(ErrorKind::kInvalidEncoding,
                std::string("NFC normalization failed: ") + status.errorName());
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool IsScriptPure(std::string_view text) noexcept {
  if (text.empty()) return false;
  bool pure = true;
  ForEachCodepoint(text, [&](UChar32 c) {
    if (c < 0 || !IsGurmukhi(static_cast<char32_t>(c))) pure = false;
  });
  return pure;
}

Term::Term(std::string text) : text_(std::move(text)) {
  if (!IsScriptPure(text_)) {
    throw Error(ErrorKind::kInvalidTerm, "not a Gurmukhi term: '" + text_ + "'");
  }
}

std::optional<Term> Term::TryMake(std::string text) {
  if (!IsScriptPure(text)) return std::nullopt;
  return Term(Unchecked{}, std::move(text));
}

std::string strip_symbols(std::string_view content) {
  std::string out;
  out.reserve(content.size());
  bool pending_separator = false;
  ForEachCodepoint(content, [&](UChar32 c) {
    if (c < 0) return;
    const auto ch = static_cast<char32_t>(c);
    switch (classify_char(ch)) {
      case CharClass::kGurmukhi:
        if (pending_separator && !out.empty()) out.push_back(',');
        pending_separator = false;
        AppendUtf8(out, ch);
        break;
      case CharClass::kSeparator:
        pending_separator = true;
        break;
      case CharClass::kUseless:
        break;
    }
  });
  return out;
}

std::vector<Term> tokenize(std::string_view normalized) {
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= normalized.size()) {
    std::size_t end = normalized.find(',', start);
    if (end == std::string_view::npos) end = normalized.size();
    if (end > start) {
      std::string field(normalized.substr(start, end - start));
      if (!IsScriptPure(field)) {
        throw Error(ErrorKind::kInvalidTerm, "not a Gurmukhi term: '" + field + "'");
      }
      terms.push_back(Term(Term::Unchecked{}, std::move(field)));
    }
    start = end + 1;
  }
  return terms;
}

std::vector<Term> gate_text(std::string_view content) {
  const std::string nfc = NormalizeNfc(content);
  // Stripping can bring two combining marks together that were split by a
  // dropped codepoint, so the result is normalized once more.
  const std::string stripped = NormalizeNfc(strip_symbols(nfc));
  std::vector<Term> terms = tokenize(stripped);
  if (terms.empty()) {
    bool has_content = false;
    ForEachCodepoint(nfc, [&](UChar32 c) {
      if (c < 0 || classify_char(static_cast<char32_t>(c)) != CharClass::kSeparator) {
        has_content = true;
      }
    });
    if (has_content) {
      throw Error(ErrorKind::kNotGurmukhi, "document contains no Gurmukhi text");
    }
  }
  return terms;
}

std::vector<Term> gate_document(const RawDocument& doc) {
  try {
    return gate_text(doc.content);
  } catch (const Error& e) {
    if (!doc.source_path) throw;
    throw Error(e.kind(), doc.source_path->string() + ": " + e.what(), e.line());
  }
}

RawDocument LoadDocument(const std::filesystem::path& path, std::optional<DomainLabel> domain) {
  RawDocument doc;
  doc.content = ReadFileBytes(path);
  doc.source_path = path;
  doc.domain = std::move(domain);
  if (auto bad = FirstInvalidUtf8(doc.content)) {
    throw Error(ErrorKind::kInvalidEncoding,
                path.string() + ": ill-formed UTF-8 at byte offset " + std::to_string(*bad));
  }
  return doc;
}

std::string JoinTerms(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += terms[i].text();
  }
  return out;
}

}  // namespace punjabi_prep
