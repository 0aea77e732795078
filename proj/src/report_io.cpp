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

#include "punjabi_prep/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <utility>

#include "punjabi_prep/term_list.hpp"

namespace punjabi_prep {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ErrorKind ErrorKindFromName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorKind::kInvalidReport); ++i) {
    const auto kind = static_cast<ErrorKind>(i);
    if (ErrorKindName(kind) == name) return kind;
  }
  throw Error(ErrorKind::kInvalidReport, "unknown error kind '" + std::string(name) + "'");
}

ordered_json TermsToJson(const std::vector<Term>& terms) {
  ordered_json a = ordered_json::array();
  for (const Term& t : terms) a.push_back(t.text());
  return a;
}

std::vector<Term> TermsFromStrings(const std::vector<std::string>& texts) {
  std::vector<Term> out;
  out.reserve(texts.size());
  for (const auto& s : texts) {
    auto t = Term::TryMake(s);
    if (!t) throw Error(ErrorKind::kInvalidReport, "report holds a non-Gurmukhi term '" + s + "'");
    out.push_back(std::move(*t));
  }
  return out;
}

ordered_json DomainStatsToJson(const DomainStats& s) {
  const StageCounts& c = s.counts;
  ordered_json j;
  j["n_documents"] = c.n_documents;
  j["n_skipped"] = c.n_skipped;
  j["n_tokens"] = c.n_tokens;
  j["n_duplicates"] = c.n_duplicates;
  j["n_stopwords"] = c.n_stopwords;
  j["n_dict"] = c.n_dict;
  j["n_gaz"] = c.n_gaz;
  j["n_rejected"] = c.n_rejected;
  j["pct_duplicates"] = s.micro.duplicates;
  j["pct_stopwords"] = s.micro.stopwords;
  j["pct_dict"] = s.micro.dict;
  j["pct_gaz"] = s.micro.gaz;
  j["pct_rejected"] = s.micro.rejected;
  j["macro_pct_duplicates"] = s.macro.duplicates;
  j["macro_pct_stopwords"] = s.macro.stopwords;
  j["macro_pct_dict"] = s.macro.dict;
  j["macro_pct_gaz"] = s.macro.gaz;
  j["macro_pct_rejected"] = s.macro.rejected;
  j["mean_stopwords_per_document"] = s.mean_stopwords_per_document;
  return j;
}

// RFC 4180 quoting.
std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string JoinSpace(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ' ';
    out += terms[i].text();
  }
  return out;
}

std::vector<std::string> SplitSpace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(' ', pos);
    if (end == std::string_view::npos) end = s.size();
    if (end > pos) out.emplace_back(s.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::size_t ParseCount(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kInvalidReport,
                "line " + std::to_string(line) + ": bad count '" + std::string(s) + "'", line);
  }
  return v;
}

constexpr std::string_view kReportCsvHeader =
    "status,source_path,domain,n_tokens,n_duplicates,n_stopwords,n_dict,n_gaz,n_rejected,"
    "accepted,rejected,error,message";

void CheckReport(const DocumentReport& r) {
  if (!r.conserves() || r.accepted.size() != r.n_dict + r.n_gaz ||
      r.rejected.size() != r.n_rejected) {
    throw Error(ErrorKind::kInvalidReport, r.source_path + ": report counts are inconsistent");
  }
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

ordered_json ReportToJson(const DocumentReport& r) {
  ordered_json j;
  j["status"] = "ok";
  j["source_path"] = r.source_path;
  j["domain"] = r.domain ? ordered_json(r.domain->name()) : ordered_json(nullptr);
  j["n_tokens"] = r.n_tokens;
  j["n_duplicates"] = r.n_duplicates;
  j["n_stopwords"] = r.n_stopwords;
  j["n_dict"] = r.n_dict;
  j["n_gaz"] = r.n_gaz;
  j["n_rejected"] = r.n_rejected;
  j["accepted"] = TermsToJson(r.accepted);
  j["rejected"] = TermsToJson(r.rejected);
  return j;
}

ordered_json SkipToJson(const SkipRecord& s) {
  ordered_json j;
  j["status"] = "skipped";
  j["source_path"] = s.source_path;
  j["domain"] = s.domain ? ordered_json(s.domain->name()) : ordered_json(nullptr);
  j["error"] = std::string(ErrorKindName(s.error));
  j["message"] = s.message;
  return j;
}

ordered_json StatsToJson(const CorpusStats& stats) {
  ordered_json j;
  j["overall"] = DomainStatsToJson(stats.overall);
  ordered_json per = ordered_json::object();
  for (const auto& [domain, s] : stats.per_domain) per[domain.name()] = DomainStatsToJson(s);
  j["per_domain"] = std::move(per);
  return j;
}

ReportRecord RecordFromJson(const json& j) {
  try {
    std::optional<DomainLabel> domain;
    if (j.contains("domain") && !j.at("domain").is_null()) {
      domain = DomainLabel::FromName(j.at("domain").get<std::string>());
    }
    const std::string status = j.at("status").get<std::string>();
    if (status == "skipped") {
      return SkipRecord{j.at("source_path").get<std::string>(), domain,
                        ErrorKindFromName(j.at("error").get<std::string>()),
                        j.value("message", std::string())};
    }
    if (status != "ok") throw Error(ErrorKind::kInvalidReport, "unknown status '" + status + "'");
    DocumentReport r;
    r.source_path = j.at("source_path").get<std::string>();
    r.domain = domain;
    r.n_tokens = j.at("n_tokens").get<std::size_t>();
    r.n_duplicates = j.at("n_duplicates").get<std::size_t>();
    r.n_stopwords = j.at("n_stopwords").get<std::size_t>();
    r.n_dict = j.at("n_dict").get<std::size_t>();
    r.n_gaz = j.at("n_gaz").get<std::size_t>();
    r.n_rejected = j.at("n_rejected").get<std::size_t>();
    r.accepted = TermsFromStrings(j.at("accepted").get<std::vector<std::string>>());
    r.rejected = TermsFromStrings(j.at("rejected").get<std::vector<std::string>>());
    CheckReport(r);
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidReport, std::string("malformed report record: ") + e.what());
  }
}

std::string ReportsToJsonLines(const std::vector<ReportRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    if (const auto* r = std::get_if<DocumentReport>(&rec)) {
      out += ReportToJson(*r).dump();
    } else {
      out += SkipToJson(std::get<SkipRecord>(rec)).dump();
    }
    out += '\n';
  }
  return out;
}

std::string ReportsToCsv(const std::vector<ReportRecord>& records) {
  std::string out(kReportCsvHeader);
  out += '\n';
  for (const auto& rec : records) {
    if (const auto* r = std::get_if<DocumentReport>(&rec)) {
      out += "ok," + CsvField(r->source_path) + "," + CsvField(r->domain ? r->domain->name() : "") +
             "," + std::to_string(r->n_tokens) + "," + std::to_string(r->n_duplicates) + "," +
             std::to_string(r->n_stopwords) + "," + std::to_string(r->n_dict) + "," +
             std::to_string(r->n_gaz) + "," + std::to_string(r->n_rejected) + "," +
             JoinSpace(r->accepted) + "," + JoinSpace(r->rejected) + ",,";
    } else {
      const auto& s = std::get<SkipRecord>(rec);
      out += "skipped," + CsvField(s.source_path) + "," +
             CsvField(s.domain ? s.domain->name() : "") + ",,,,,,,,," +
             std::string(ErrorKindName(s.error)) + "," + CsvField(s.message);
    }
    out += '\n';
  }
  return out;
}

std::string StatsToCsv(const CorpusStats& stats) {
  std::string out =
      "scope,domain,n_documents,n_skipped,n_tokens,n_duplicates,n_stopwords,n_dict,n_gaz,"
      "n_rejected,pct_duplicates,pct_stopwords,pct_dict,pct_gaz,pct_rejected,"
      "macro_pct_duplicates,macro_pct_stopwords,macro_pct_dict,macro_pct_gaz,"
      "macro_pct_rejected,mean_stopwords_per_document\n";
  auto row = [&](std::string_view scope, std::string_view domain, const DomainStats& s) {
    const ordered_json j = DomainStatsToJson(s);
    out += scope;
    out += ',';
    out += CsvField(domain);
    for (const auto& [key, value] : j.items()) {
      out += ',';
      out += value.dump();
    }
    out += '\n';
  };
  row("overall", "", stats.overall);
  for (const auto& [domain, s] : stats.per_domain) row("domain", domain.name(), s);
  return out;
}

std::vector<ReportRecord> ReadReportFile(const std::filesystem::path& path) {
  const std::string content = ReadFileBytes(path);
  std::vector<ReportRecord> records;
  if (path.extension() == ".csv") {
    const auto rows = ParseCsv(content);
    if (rows.empty()) return records;
    std::string header;
    for (std::size_t i = 0; i < rows.front().size(); ++i) {
      if (i > 0) header += ',';
      header += rows.front()[i];
    }
    if (header != kReportCsvHeader) {
      throw Error(ErrorKind::kInvalidReport, path.string() + ": unexpected CSV header", 1);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& f = rows[i];
      const std::size_t line = i + 1;
      if (f.size() == 1 && f[0].empty()) continue;
      if (f.size() != 13) {
        throw Error(ErrorKind::kInvalidReport,
                    path.string() + ":" + std::to_string(line) + ": expected 13 columns", line);
      }
      std::optional<DomainLabel> domain;
      if (!f[2].empty()) domain = DomainLabel::FromName(f[2]);
      if (f[0] == "skipped") {
        records.emplace_back(SkipRecord{f[1], domain, ErrorKindFromName(f[11]), f[12]});
        continue;
      }
      if (f[0] != "ok") {
        throw Error(ErrorKind::kInvalidReport,
                    path.string() + ":" + std::to_string(line) + ": unknown status", line);
      }
      DocumentReport r;
      r.source_path = f[1];
      r.domain = domain;
      r.n_tokens = ParseCount(f[3], line);
      r.n_duplicates = ParseCount(f[4], line);
      r.n_stopwords = ParseCount(f[5], line);
      r.n_dict = ParseCount(f[6], line);
      r.n_gaz = ParseCount(f[7], line);
      r.n_rejected = ParseCount(f[8], line);
      r.accepted = TermsFromStrings(SplitSpace(f[9]));
      r.rejected = TermsFromStrings(SplitSpace(f[10]));
      CheckReport(r);
      records.emplace_back(std::move(r));
    }
    return records;
  }

  std::size_t line = 0;
  std::istringstream in(content);
  std::string text;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kInvalidReport,
                  path.string() + ":" + std::to_string(line) + ": " + e.what(), line);
    }
    try {
      records.push_back(RecordFromJson(j));
    } catch (const Error& e) {
      throw Error(ErrorKind::kInvalidReport,
                  path.string() + ":" + std::to_string(line) + ": " + e.what(), line);
    }
  }
  return records;
}

CorpusStats AggregateRecords(const std::vector<ReportRecord>& records) {
  StatsAccumulator acc;
  for (const auto& rec : records) {
    if (const auto* r = std::get_if<DocumentReport>(&rec)) {
      acc.Add(*r);
    } else {
      acc.AddSkip(std::get<SkipRecord>(rec).domain);
    }
  }
  return acc.Finish();
}

}  // namespace punjabi_prep
