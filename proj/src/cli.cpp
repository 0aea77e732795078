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

#include "punjabi_prep/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "punjabi_prep/corpus.hpp"
#include "punjabi_prep/error.hpp"
#include "punjabi_prep/pipeline.hpp"
#include "punjabi_prep/term_list.hpp"

namespace punjabi_prep {
namespace {

namespace fs = std::filesystem;

struct WorkItem {
  fs::path path;
  std::optional<DomainLabel> domain;
  fs::path out_dir;  // where the term files go
};

void WriteText(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw Error(ErrorKind::kIo, path.string() + ": write failed");
}

bool CheckReadable(const fs::path& path, std::string_view role, std::ostream& err) {
  std::error_code ec;
  if (path.empty()) {
    err << "error: missing " << role << " path\n";
    return false;
  }
  if (!fs::exists(path, ec)) {
    err << "error: " << role << " not found: " << path.string() << "\n";
    return false;
  }
  return true;
}

unsigned DefaultWorkers() {
  if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.workers < 1) {
    err << "error: worker count must be at least 1\n";
    return kExitFailure;
  }
  if (!CheckReadable(config.input, "input", err) ||
      !CheckReadable(config.stoplist, "stop list", err) ||
      !CheckReadable(config.dictionary, "dictionary", err) ||
      !CheckReadable(config.gazetteer, "gazetteer", err)) {
    return kExitFailure;
  }
  if (config.out_dir.empty()) {
    err << "error: missing output directory\n";
    return kExitFailure;
  }

  Resources resources;
  std::vector<WorkItem> items;
  try {
    resources = Resources::Load(config.stoplist, config.dictionary, config.gazetteer);
    if (fs::is_directory(config.input)) {
      for (const CorpusFile& f : discover_corpus(config.input)) {
        items.push_back({f.path, f.domain, config.out_dir / f.path.parent_path().filename()});
      }
    } else {
      items.push_back({config.input, std::nullopt, config.out_dir});
    }
    fs::create_directories(config.out_dir);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  const PipelineOptions options{config.keep_intermediate};
  std::vector<std::optional<ReportRecord>> records(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex err_mu;

  auto worker = [&] {
    for (;;) {
      if (abort.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      const WorkItem& item = items[i];
      try {
        RawDocument doc = LoadDocument(item.path, item.domain);
        DocumentReport report = preprocess_document(doc, resources, options);
        write_outputs(report, item.out_dir, item.path.stem().string());
        report.stages.reset();
        records[i] = std::move(report);
      } catch (const Error& e) {
        {
          std::lock_guard lock(err_mu);
          err << (config.fail_fast ? "error: " : "skipped: ") << e.what() << "\n";
        }
        records[i] = SkipRecord{item.path.generic_string(), item.domain, e.kind(), e.what()};
        if (config.fail_fast) abort.store(true);
      }
    }
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(config.workers, std::max<std::size_t>(1, items.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (abort.load()) return kExitFailure;

  std::vector<ReportRecord> done;
  done.reserve(records.size());
  std::size_t skipped = 0;
  for (auto& r : records) {
    if (std::holds_alternative<SkipRecord>(*r)) ++skipped;
    done.push_back(std::move(*r));
  }
  const CorpusStats stats = AggregateRecords(done);

  try {
    if (config.format == ReportFormat::kJson) {
      WriteText(config.out_dir / "reports.jsonl", ReportsToJsonLines(done));
      WriteText(config.out_dir / "stats.json", StatsToJson(stats).dump(2) + "\n");
    } else {
      WriteText(config.out_dir / "reports.csv", ReportsToCsv(done));
      WriteText(config.out_dir / "stats.csv", StatsToCsv(stats));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  out << "processed " << done.size() - skipped << " of " << done.size() << " documents";
  if (skipped > 0) out << ", " << skipped << " skipped";
  out << "\n";
  return skipped > 0 ? kExitPartial : kExitOk;
}

int cmd_split(const fs::path& corpus_root, double ratio, std::uint64_t seed,
              const fs::path& manifest_path, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<CorpusFile> files = discover_corpus(corpus_root);
    const SplitManifest manifest = split_corpus(files, ratio, seed);
    WriteText(manifest_path, manifest.Serialize());

    std::map<DomainLabel, std::pair<std::size_t, std::size_t>> counts;
    for (const ManifestEntry& e : manifest.entries) {
      auto& c = counts[e.domain];
      (e.assignment == Assignment::kLearning ? c.first : c.second)++;
    }
    for (const auto& [domain, c] : counts) {
      out << domain.name() << ": " << c.first << " learning, " << c.second << " testing\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_stats(const fs::path& reports_path, ReportFormat format, const fs::path& output_path,
              std::ostream& out, std::ostream& err) {
  try {
    const CorpusStats stats = AggregateRecords(ReadReportFile(reports_path));
    const std::string text =
        format == ReportFormat::kJson ? StatsToJson(stats).dump(2) + "\n" : StatsToCsv(stats);
    if (output_path.empty()) {
      out << text;
    } else {
      WriteText(output_path, text);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_lexicon_check(const fs::path& path, std::ostream& out, std::ostream& err) {
  TermListScan scan;
  try {
    scan = ScanTermListFile(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  for (const TermListIssue& issue : scan.issues) {
    err << path.string() << ":" << issue.line << ": " << ErrorKindName(issue.kind) << ": "
        << issue.message << "\n";
  }
  out << scan.entries.size() << " entries, " << scan.duplicate_count << " duplicates";
  if (!scan.ok()) out << ", " << scan.issues.size() << " invalid lines";
  out << "\n";
  return scan.ok() ? kExitOk : kExitFailure;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pre-processing for Gurmukhi Punjabi text corpora", "punjabi-prep"};
  app.require_subcommand(1);

  RunConfig run;
  std::string run_format = "json";
  unsigned run_workers = 0;
  auto* run_cmd = app.add_subcommand("run", "Pre-process a document or a corpus directory");
  run_cmd->add_option("input", run.input, "Document file or corpus root")->required();
  run_cmd->add_option("--stoplist", run.stoplist, "Stop-word list")->required();
  run_cmd->add_option("--dict", run.dictionary, "Dictionary term list")->required();
  run_cmd->add_option("--gazetteer", run.gazetteer, "Gazetteer term list")->required();
  run_cmd->add_option("-o,--out", run.out_dir, "Output directory")->required();
  run_cmd->add_option("--format", run_format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_flag("--keep-intermediate", run.keep_intermediate,
                    "Also write per-stage term files");
  run_cmd->add_flag("--fail-fast", run.fail_fast, "Stop at the first document error");
  run_cmd->add_option("-j,--workers", run_workers,
                      std::string("Worker threads (default: $") + kWorkersEnv +
                          " or hardware concurrency)")
      ->check(CLI::PositiveNumber);

  fs::path split_root;
  fs::path split_manifest;
  double split_ratio = 0.7;
  std::uint64_t split_seed = 0;
  auto* split_cmd = app.add_subcommand("split", "Write a learning/testing split manifest");
  split_cmd->add_option("corpus", split_root, "Corpus root")->required();
  split_cmd->add_option("--ratio", split_ratio, "Learning fraction, 0 < ratio < 1");
  split_cmd->add_option("--seed", split_seed, "Shuffle seed");
  split_cmd->add_option("-o,--manifest", split_manifest, "Manifest output path")->required();

  fs::path stats_input;
  fs::path stats_output;
  std::string stats_format = "json";
  auto* stats_cmd = app.add_subcommand("stats", "Re-aggregate a reports.jsonl or reports.csv file");
  stats_cmd->add_option("reports", stats_input, "Report file")->required();
  stats_cmd->add_option("--format", stats_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  stats_cmd->add_option("-o,--output", stats_output, "Write to this file instead of stdout");

  fs::path check_path;
  auto* check_cmd = app.add_subcommand("lexicon-check", "Validate a stop list or lexicon file");
  check_cmd->add_option("path", check_path, "Term list file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (run_cmd->parsed()) {
    run.format = *ParseReportFormat(run_format);
    run.workers = run_workers > 0 ? run_workers : DefaultWorkers();
    return cmd_run(run, out, err);
  }
  if (split_cmd->parsed()) {
    return cmd_split(split_root, split_ratio, split_seed, split_manifest, out, err);
  }
  if (stats_cmd->parsed()) {
    return cmd_stats(stats_input, *ParseReportFormat(stats_format), stats_output, out, err);
  }
  return cmd_lexicon_check(check_path, out, err);
}

}  // namespace punjabi_prep
