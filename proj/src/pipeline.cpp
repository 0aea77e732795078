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

#include "punjabi_prep/pipeline.hpp"

#include <fstream>
#include <system_error>
#include <utility>

#include "punjabi_prep/error.hpp"

namespace punjabi_prep {

Resources Resources::Load(const std::filesystem::path& stoplist,
                          const std::filesystem::path& dictionary,
                          const std::filesystem::path& gazetteer) {
  Resources res;
  res.stops = load_stoplist(stoplist);
  res.dict = load_lexicon(dictionary, LexiconKind::kDictionary);
  res.gaz = load_lexicon(gazetteer, LexiconKind::kGazetteer);
  return res;
}

DocumentReport preprocess_document(const RawDocument& doc, const Resources& res,
                                   const PipelineOptions& options) {
  DocumentReport report;
  if (doc.source_path) report.source_path = doc.source_path->generic_string();
  report.domain = doc.domain;

  std::vector<Term> tokens = gate_document(doc);
  report.n_tokens = tokens.size();

  DedupResult dedup = dedup_terms(tokens);
  report.n_duplicates = dedup.duplicate_count;

  StopwordResult filtered = remove_stopwords(dedup.unique, res.stops);
  report.n_stopwords = filtered.removed_count;

  MatchPartition match =
      match_terms(filtered.kept, res.dict, res.gaz, options.keep_intermediate);
  report.n_dict = match.dictionary_matched.size();
  report.n_gaz = match.gazetteer_matched.size();
  report.n_rejected = match.rejected.size();

  report.accepted = std::move(match.dictionary_matched);
  report.accepted.insert(report.accepted.end(),
                         std::make_move_iterator(match.gazetteer_matched.begin()),
                         std::make_move_iterator(match.gazetteer_matched.end()));
  report.rejected = std::move(match.rejected);

  if (options.keep_intermediate) {
    report.stages = IntermediateStages{std::move(tokens), std::move(dedup.unique),
                                       std::move(filtered.kept), std::move(match.remaining)};
  }
  return report;
}

void WriteTermFile(const std::filesystem::path& path, const std::vector<Term>& terms) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  const std::string content = JoinTerms(terms);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

std::vector<std::filesystem::path> write_outputs(const DocumentReport& report,
                                                 const std::filesystem::path& out_dir,
                                                 const std::string& stem) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::kIo, out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](std::string_view suffix, const std::vector<Term>& terms) {
    auto path = out_dir / (stem + std::string(suffix));
    WriteTermFile(path, terms);
    written.push_back(std::move(path));
  };
  emit(".accepted.txt", report.accepted);
  emit(".rejected.txt", report.rejected);
  if (report.stages) {
    emit(".stripped.txt", report.stages->stripped);
    emit(".deduped.txt", report.stages->deduped);
    emit(".filtered.txt", report.stages->filtered);
    emit(".remaining.txt", report.stages->remaining);
  }
  return written;
}

std::vector<std::filesystem::path> write_outputs(const DocumentReport& report,
                                                 const std::filesystem::path& out_dir) {
  std::string stem = std::filesystem::path(report.source_path).stem().string();
  if (stem.empty()) stem = "document";
  return write_outputs(report, out_dir, stem);
}

}  // namespace punjabi_prep
