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

// Report serialization.
//
// JSON: reports.jsonl holds one object per document, stats.json one object
// for the whole run. Field names follow DocumentReport / CorpusStats. The
// schemas live in schema/*.schema.json.
//
// CSV: reports.csv / stats.csv flatten the same fields. Term lists are
// space-joined inside a single column.

#ifndef PUNJABI_PREP_REPORT_IO_HPP_
#define PUNJABI_PREP_REPORT_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "punjabi_prep/corpus.hpp"
#include "punjabi_prep/error.hpp"
#include "punjabi_prep/pipeline.hpp"

namespace punjabi_prep {

enum class ReportFormat { kJson, kCsv };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

struct SkipRecord {
  std::string source_path;
  std::optional<DomainLabel> domain;
  ErrorKind error = ErrorKind::kNotGurmukhi;
  std::string message;
};

using ReportRecord = std::variant<DocumentReport, SkipRecord>;

nlohmann::ordered_json ReportToJson(const DocumentReport& report);
nlohmann::ordered_json SkipToJson(const SkipRecord& skip);
nlohmann::ordered_json StatsToJson(const CorpusStats& stats);

// Throws Error(kInvalidReport).
ReportRecord RecordFromJson(const nlohmann::json& j);

std::string ReportsToJsonLines(const std::vector<ReportRecord>& records);
std::string ReportsToCsv(const std::vector<ReportRecord>& records);
std::string StatsToCsv(const CorpusStats& stats);

// Reads reports.jsonl or reports.csv (by extension). Throws
// Error(kInvalidReport) with the offending line.
std::vector<ReportRecord> ReadReportFile(const std::filesystem::path& path);

CorpusStats AggregateRecords(const std::vector<ReportRecord>& records);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_REPORT_IO_HPP_
