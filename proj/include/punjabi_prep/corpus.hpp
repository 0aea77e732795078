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

// Corpus layout, learning/testing splits and corpus statistics.
//
// A corpus root holds one subdirectory per domain, each with .txt files:
//
//   corpus/agriculture/0001.txt
//   corpus/sports/0001.txt
//   ...

#ifndef PUNJABI_PREP_CORPUS_HPP_
#define PUNJABI_PREP_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "punjabi_prep/domain.hpp"
#include "punjabi_prep/pipeline.hpp"

namespace punjabi_prep {

struct CorpusFile {
  std::filesystem::path path;  // root / domain / name
  std::string relative;        // "domain/name", '/'-separated
  DomainLabel domain;
};

// All regular *.txt files one level below each subdirectory of root,
// sorted by relative path. Throws kNotADirectory or kEmptyCorpus.
std::vector<CorpusFile> discover_corpus(const std::filesystem::path& root);

enum class Assignment { kLearning, kTesting };

std::string_view AssignmentName(Assignment a);

struct ManifestEntry {
  std::string path;
  DomainLabel domain;
  Assignment assignment = Assignment::kLearning;
};

struct SplitManifest {
  std::vector<ManifestEntry> entries;
  double ratio = 0.7;
  std::uint64_t seed = 0;

  // "# ratio=<r> seed=<s>" header, then one
  // "<LEARNING|TESTING>\t<domain>\t<path>\n" line per entry.
  std::string Serialize() const;
  static SplitManifest Parse(std::string_view text);
};

// round-half-up(ratio * n)
std::size_t LearningCount(std::size_t n, double ratio);

// Per domain: sort by path, seeded Fisher-Yates shuffle, then the first
// LearningCount() files are LEARNING and the rest TESTING. Domains appear
// in label order, learning entries before testing ones. Throws
// kInvalidRatio unless 0 < ratio < 1.
SplitManifest split_corpus(std::span<const CorpusFile> files, double ratio,
                           std::uint64_t seed);

// Five-way breakdown of n_tokens, in percent.
struct Percentages {
  double duplicates = 0;
  double stopwords = 0;
  double dict = 0;
  double gaz = 0;
  double rejected = 0;

  double sum() const noexcept { return duplicates + stopwords + dict + gaz + rejected; }
};

// Exact, order-independent sums. Per-document percentages used for the
// macro average are accumulated in fixed point (1e-9 percent units) so
// that merging in any order gives bit-identical results.
struct StageCounts {
  std::size_t n_documents = 0;
  std::size_t n_skipped = 0;
  std::size_t n_tokens = 0;
  std::size_t n_duplicates = 0;
  std::size_t n_stopwords = 0;
  std::size_t n_dict = 0;
  std::size_t n_gaz = 0;
  std::size_t n_rejected = 0;
  // documents with n_tokens > 0, and their summed percentages
  std::size_t n_macro_documents = 0;
  std::int64_t macro_sum[5] = {0, 0, 0, 0, 0};

  void Add(const DocumentReport& report);
  StageCounts& operator+=(const StageCounts& other);
  friend bool operator==(const StageCounts&, const StageCounts&) = default;
};

struct DomainStats {
  StageCounts counts;
  Percentages micro;  // pooled counts over pooled n_tokens
  Percentages macro;  // mean of per-document percentages
  double mean_stopwords_per_document = 0;

  static DomainStats FromCounts(const StageCounts& counts);
};

struct CorpusStats {
  std::map<DomainLabel, DomainStats> per_domain;
  DomainStats overall;
};

// Associative, commutative fold of document results.
class StatsAccumulator {
 public:
  void Add(const DocumentReport& report);
  void AddSkip(const std::optional<DomainLabel>& domain);
  void Merge(const StatsAccumulator& other);

  CorpusStats Finish() const;

 private:
  std::map<DomainLabel, StageCounts> per_domain_;
  StageCounts overall_;
};

// Reports without a domain count toward `overall` only.
CorpusStats aggregate_stats(std::span<const DocumentReport> reports,
                            std::size_t skipped = 0);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_CORPUS_HPP_
