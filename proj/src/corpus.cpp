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

#include "punjabi_prep/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <system_error>
#include <utility>

#include "punjabi_prep/error.hpp"

namespace punjabi_prep {
namespace {

namespace fs = std::filesystem;

bool IsHidden(const fs::path& p) {
  const std::string name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t StableHash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Unbiased draw in [0, bound) from the raw 64-bit engine output. Avoids
// std::uniform_int_distribution, whose algorithm differs between standard
// libraries.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

std::string FormatDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(v);
}

constexpr double kMacroScale = 1e9;

}  // namespace

std::vector<CorpusFile> discover_corpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorKind::kNotADirectory, root.string() + ": not a directory");
  }
  std::vector<CorpusFile> files;
  for (const auto& domain_entry : fs::directory_iterator(root)) {
    if (!domain_entry.is_directory() || IsHidden(domain_entry.path())) continue;
    const std::string domain_name = domain_entry.path().filename().string();
    const DomainLabel label = DomainLabel::FromName(domain_name);
    for (const auto& file_entry : fs::directory_iterator(domain_entry.path())) {
      const fs::path& p = file_entry.path();
      if (!file_entry.is_regular_file() || IsHidden(p) || p.extension() != ".txt") continue;
      files.push_back({p, domain_name + "/" + p.filename().string(), label});
    }
  }
  if (files.empty()) {
    throw Error(ErrorKind::kEmptyCorpus, root.string() + ": no .txt documents found");
  }
  std::sort(files.begin(), files.end(),
            [](const CorpusFile& a, const CorpusFile& b) { return a.relative < b.relative; });
  return files;
}

std::string_view AssignmentName(Assignment a) {
  return a == Assignment::kLearning ? "LEARNING" : "TESTING";
}

std::size_t LearningCount(std::size_t n, double ratio) {
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 0.5));
}

SplitManifest split_corpus(std::span<const CorpusFile> files, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorKind::kInvalidRatio,
                "split ratio must lie strictly between 0 and 1, got " + FormatDouble(ratio));
  }
  std::map<DomainLabel, std::vector<const CorpusFile*>> by_domain;
  for (const CorpusFile& f : files) by_domain[f.domain].push_back(&f);

  SplitManifest manifest;
  manifest.ratio = ratio;
  manifest.seed = seed;
  for (auto& [domain, members] : by_domain) {
    std::sort(members.begin(), members.end(),
              [](const CorpusFile* a, const CorpusFile* b) { return a->relative < b->relative; });
    std::mt19937_64 rng(seed ^ StableHash(domain.name()));
    for (std::size_t i = members.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(UniformBelow(rng, i));
      std::swap(members[i - 1], members[j]);
    }
    const std::size_t learning = LearningCount(members.size(), ratio);
    for (std::size_t i = 0; i < members.size(); ++i) {
      manifest.entries.push_back({members[i]->relative, domain,
                                  i < learning ? Assignment::kLearning : Assignment::kTesting});
    }
  }
  return manifest;
}

std::string SplitManifest::Serialize() const {
  std::string out = "# ratio=" + FormatDouble(ratio) + " seed=" + std::to_string(seed) + "\n";
  for (const ManifestEntry& e : entries) {
    out += AssignmentName(e.assignment);
    out += '\t';
    out += e.domain.name();
    out += '\t';
    out += e.path;
    out += '\n';
  }
  return out;
}

SplitManifest SplitManifest::Parse(std::string_view text) {
  SplitManifest m;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto r = line.find("ratio="); r != std::string_view::npos) {
        std::from_chars(line.data() + r + 6, line.data() + line.size(), m.ratio);
      }
      if (auto s = line.find("seed="); s != std::string_view::npos) {
        std::from_chars(line.data() + s + 5, line.data() + line.size(), m.seed);
      }
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw Error(ErrorKind::kInvalidReport, "manifest line " + std::to_string(line_no) +
                                                 ": expected three tab-separated fields",
                  line_no);
    }
    const std::string_view assignment = line.substr(0, t1);
    ManifestEntry e;
    if (assignment == "LEARNING") {
      e.assignment = Assignment::kLearning;
    } else if (assignment == "TESTING") {
      e.assignment = Assignment::kTesting;
    } else {
      throw Error(ErrorKind::kInvalidReport,
                  "manifest line " + std::to_string(line_no) + ": unknown assignment '" +
                      std::string(assignment) + "'",
                  line_no);
    }
    e.domain = DomainLabel::FromName(line.substr(t1 + 1, t2 - t1 - 1));
    e.path = std::string(line.substr(t2 + 1));
    m.entries.push_back(std::move(e));
  }
  return m;
}

void StageCounts::Add(const DocumentReport& r) {
  ++n_documents;
  n_tokens += r.n_tokens;
  n_duplicates += r.n_duplicates;
  n_stopwords += r.n_stopwords;
  n_dict += r.n_dict;
  n_gaz += r.n_gaz;
  n_rejected += r.n_rejected;
  if (r.n_tokens == 0) return;
  ++n_macro_documents;
  const std::size_t parts[5] = {r.n_duplicates, r.n_stopwords, r.n_dict, r.n_gaz, r.n_rejected};
  const double n = static_cast<double>(r.n_tokens);
  for (int k = 0; k < 5; ++k) {
    macro_sum[k] += std::llround(100.0 * kMacroScale * static_cast<double>(parts[k]) / n);
  }
}

StageCounts& StageCounts::operator+=(const StageCounts& o) {
  n_documents += o.n_documents;
  n_skipped += o.n_skipped;
  n_tokens += o.n_tokens;
  n_duplicates += o.n_duplicates;
  n_stopwords += o.n_stopwords;
  n_dict += o.n_dict;
  n_gaz += o.n_gaz;
  n_rejected += o.n_rejected;
  n_macro_documents += o.n_macro_documents;
  for (int k = 0; k < 5; ++k) macro_sum[k] += o.macro_sum[k];
  return *this;
}

DomainStats DomainStats::FromCounts(const StageCounts& c) {
  DomainStats s;
  s.counts = c;
  if (c.n_tokens > 0) {
    const double n = static_cast<double>(c.n_tokens);
    s.micro = {100.0 * static_cast<double>(c.n_duplicates) / n,
               100.0 * static_cast<double>(c.n_stopwords) / n,
               100.0 * static_cast<double>(c.n_dict) / n,
               100.0 * static_cast<double>(c.n_gaz) / n,
               100.0 * static_cast<double>(c.n_rejected) / n};
  }
  if (c.n_macro_documents > 0) {
    const double d = kMacroScale * static_cast<double>(c.n_macro_documents);
    s.macro = {static_cast<double>(c.macro_sum[0]) / d, static_cast<double>(c.macro_sum[1]) / d,
               static_cast<double>(c.macro_sum[2]) / d, static_cast<double>(c.macro_sum[3]) / d,
               static_cast<double>(c.macro_sum[4]) / d};
  }
  if (c.n_documents > 0) {
    s.mean_stopwords_per_document =
        static_cast<double>(c.n_stopwords) / static_cast<double>(c.n_documents);
  }
  return s;
}

void StatsAccumulator::Add(const DocumentReport& report) {
  overall_.Add(report);
  if (report.domain) per_domain_[*report.domain].Add(report);
}

void StatsAccumulator::AddSkip(const std::optional<DomainLabel>& domain) {
  ++overall_.n_skipped;
  if (domain) ++per_domain_[*domain].n_skipped;
}

void StatsAccumulator::Merge(const StatsAccumulator& other) {
  overall_ += other.overall_;
  for (const auto& [domain, counts] : other.per_domain_) per_domain_[domain] += counts;
}

CorpusStats StatsAccumulator::Finish() const {
  CorpusStats stats;
  for (const auto& [domain, counts] : per_domain_) {
    stats.per_domain.emplace(domain, DomainStats::FromCounts(counts));
  }
  stats.overall = DomainStats::FromCounts(overall_);
  return stats;
}

CorpusStats aggregate_stats(std::span<const DocumentReport> reports, std::size_t skipped) {
  StatsAccumulator acc;
  for (const DocumentReport& r : reports) acc.Add(r);
  for (std::size_t i = 0; i < skipped; ++i) acc.AddSkip(std::nullopt);
  return acc.Finish();
}

}  // namespace punjabi_prep
