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

// Per-document pre-processing:
//
//   1-2. gate_document     script gating + symbol stripping -> n_tokens
//   3.   dedup_terms       first occurrence wins            -> n_duplicates
//   4.   remove_stopwords                                   -> n_stopwords
//   5.   dictionary match                                   -> n_dict
//   6.   gazetteer match on dictionary misses               -> n_gaz / n_rejected
//
// The accepted list is the dictionary matches followed by the gazetteer
// matches, each in input order.

#ifndef PUNJABI_PREP_PIPELINE_HPP_
#define PUNJABI_PREP_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "punjabi_prep/domain.hpp"
#include "punjabi_prep/filters.hpp"
#include "punjabi_prep/gurmukhi.hpp"
#include "punjabi_prep/lexicon.hpp"

namespace punjabi_prep {

struct Resources {
  StopList stops;
  Lexicon dict{LexiconKind::kDictionary};
  Lexicon gaz{LexiconKind::kGazetteer};

  static Resources Load(const std::filesystem::path& stoplist,
                        const std::filesystem::path& dictionary,
                        const std::filesystem::path& gazetteer);
};

struct IntermediateStages {
  std::vector<Term> stripped;   // after gating/symbol removal
  std::vector<Term> deduped;    // after duplicate removal
  std::vector<Term> filtered;   // after stop-word removal
  std::vector<Term> remaining;  // dictionary misses
};

struct DocumentReport {
  std::string source_path;
  std::optional<DomainLabel> domain;
  std::size_t n_tokens = 0;
  std::size_t n_duplicates = 0;
  std::size_t n_stopwords = 0;
  std::size_t n_dict = 0;
  std::size_t n_gaz = 0;
  std::size_t n_rejected = 0;
  std::vector<Term> accepted;
  std::vector<Term> rejected;
  std::optional<IntermediateStages> stages;

  bool conserves() const noexcept {
    return n_tokens == n_duplicates + n_stopwords + n_dict + n_gaz + n_rejected;
  }
};

struct PipelineOptions {
  bool keep_intermediate = false;
};

// Throws kNotGurmukhi or kInvalidEncoding from gating.
DocumentReport preprocess_document(const RawDocument& doc, const Resources& res,
                                   const PipelineOptions& options = {});

// Writes <stem>.accepted.txt and <stem>.rejected.txt into out_dir, plus
// <stem>.{stripped,deduped,filtered,remaining}.txt when the report carries
// intermediate stages. Files hold comma-joined terms with no trailing
// separator. Throws Error(kIo) naming the file that failed.
std::vector<std::filesystem::path> write_outputs(const DocumentReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 const std::string& stem);
std::vector<std::filesystem::path> write_outputs(const DocumentReport& report,
                                                 const std::filesystem::path& out_dir);

void WriteTermFile(const std::filesystem::path& path, const std::vector<Term>& terms);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_PIPELINE_HPP_
