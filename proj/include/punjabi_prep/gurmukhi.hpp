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

// Character-level gating of Punjabi input text.
//
// Every codepoint falls in exactly one of three classes:
//
//   kGurmukhi   U+0A00..U+0A7F, kept verbatim.
//   kSeparator  space, tab, CR, LF, ',' and the danda marks U+0964/U+0965.
//               A run of separators becomes a single ASCII comma.
//   kUseless    everything else (ASCII digits, Latin, punctuation, emoji,
//               other Indic scripts ...). Dropped without a trace.
//
// Text is NFC-normalized before it is classified. Gurmukhi nukta letters
// (U+0A33, U+0A36, U+0A59..U+0A5B, U+0A5E) are composition exclusions, so
// NFC spells them as base letter + U+0A3C.

#ifndef PUNJABI_PREP_GURMUKHI_HPP_
#define PUNJABI_PREP_GURMUKHI_HPP_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "punjabi_prep/domain.hpp"

namespace punjabi_prep {

inline constexpr char32_t kGurmukhiFirst = 0x0A00;
inline constexpr char32_t kGurmukhiLast = 0x0A7F;
inline constexpr char32_t kDanda = 0x0964;
inline constexpr char32_t kDoubleDanda = 0x0965;

enum class CharClass { kGurmukhi, kSeparator, kUseless };

std::string_view CharClassName(CharClass c);

CharClass classify_char(char32_t ch) noexcept;

inline bool IsGurmukhi(char32_t ch) noexcept {
  return ch >= kGurmukhiFirst && ch <= kGurmukhiLast;
}

// UTF-8 helpers.
bool IsValidUtf8(std::string_view text) noexcept;
// Byte offset of the first ill-formed sequence, if any.
std::optional<std::size_t> FirstInvalidUtf8(std::string_view text) noexcept;
// Decodes well-formed UTF-8; ill-formed sequences decode as U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view codepoints);
void AppendUtf8(std::string& out, char32_t ch);

// NFC normalization of well-formed UTF-8. Throws Error(kInvalidEncoding)
// on ill-formed input.
std::string NormalizeNfc(std::string_view text);

// A single extracted token: non-empty, every codepoint in the Gurmukhi
// block. The constructor enforces this and throws Error(kInvalidTerm).
class Term {
 public:
  explicit Term(std::string text);

  // Returns nullopt instead of throwing.
  static std::optional<Term> TryMake(std::string text);

  const std::string& text() const noexcept { return text_; }
  std::string_view view() const noexcept { return text_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  struct Unchecked {};
  Term(Unchecked, std::string text) : text_(std::move(text)) {}

  std::string text_;

  friend std::vector<Term> tokenize(std::string_view normalized);
};

// True iff `text` is non-empty and consists only of Gurmukhi codepoints.
bool IsScriptPure(std::string_view text) noexcept;

struct RawDocument {
  std::string content;
  std::optional<std::filesystem::path> source_path;
  std::optional<DomainLabel> domain;
};

// Reads a document from disk. Throws kFileNotFound, kIo or
// kInvalidEncoding.
RawDocument LoadDocument(const std::filesystem::path& path,
                         std::optional<DomainLabel> domain = std::nullopt);

// Drops useless codepoints, collapses separator runs to one ',' and trims
// separators at both ends. Operates on codepoints as given; callers that
// need canonical terms should go through gate_document.
std::string strip_symbols(std::string_view content);

// Splits strip_symbols output on ','. Empty fields are skipped. Throws
// Error(kInvalidTerm) if a field is not script-pure.
std::vector<Term> tokenize(std::string_view normalized);

// validate -> NFC -> strip_symbols -> NFC -> tokenize.
//
// A document that holds only separators (or nothing at all) yields an
// empty sequence. A document with other content but no Gurmukhi codepoint
// is rejected with Error(kNotGurmukhi). Ill-formed UTF-8 is rejected with
// Error(kInvalidEncoding).
std::vector<Term> gate_document(const RawDocument& doc);
std::vector<Term> gate_text(std::string_view content);

std::string JoinTerms(const std::vector<Term>& terms);

}  // namespace punjabi_prep

template <>
struct std::hash<punjabi_prep::Term> {
  std::size_t operator()(const punjabi_prep::Term& t) const noexcept {
    return std::hash<std::string_view>{}(t.view());
  }
};

#endif  // PUNJABI_PREP_GURMUKHI_HPP_
