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

// Drives the installed-style binary as a subprocess.

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "support/temp_dir.hpp"

namespace {

namespace fs = std::filesystem;
using ::punjabi_prep::testing::ReadFile;
using ::punjabi_prep::testing::TempDir;
using ::punjabi_prep::testing::WriteFile;

const std::string kFixtures = PUNJABI_PREP_FIXTURES_DIR;
const std::string kGolden = kFixtures + "/golden";

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

Result Cli(const std::vector<std::string>& args, const std::string& env = "") {
  TempDir io;
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += Quote(PUNJABI_PREP_CLI_PATH);
  for (const auto& a : args) cmd += " " + Quote(a);
  cmd += " >" + Quote((io / "out").string()) + " 2>" + Quote((io / "err").string());
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = ReadFile(io / "out");
  r.err = ReadFile(io / "err");
  return r;
}

std::vector<std::string> ResourceArgs() {
  return {"--stoplist", kGolden + "/stoplist.txt", "--dict", kGolden + "/dictionary.txt",
          "--gazetteer", kGolden + "/gazetteer.txt"};
}

Result RunPipeline(const std::string& input, const fs::path& out,
                   std::vector<std::string> extra = {}, const std::string& env = "") {
  std::vector<std::string> args = {"run", input};
  for (auto& a : ResourceArgs()) args.push_back(a);
  args.push_back("--out");
  args.push_back(out.string());
  for (auto& a : extra) args.push_back(a);
  return Cli(args, env);
}

std::string TreeDigest(const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::string digest;
  for (const auto& f : files) {
    digest += fs::relative(f, root).generic_string() + "\n" + ReadFile(f) + "\n--\n";
  }
  return digest;
}

TEST(CliTest, HelpListsSubcommands) {
  const Result r = Cli({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"run", "split", "stats", "lexicon-check"}) {
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  }
  EXPECT_EQ(Cli({}).code, 1);
  EXPECT_EQ(Cli({"frobnicate"}).code, 1);
}

TEST(CliTest, RunCorpusWritesOutputsAndStats) {
  TempDir out;
  const Result r = RunPipeline(kFixtures + "/corpus", out.path());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "processed 5 of 5 documents\n");
  int accepted = 0, rejected = 0;
  for (const auto& e : fs::recursive_directory_iterator(out.path())) {
    const std::string name = e.path().filename().string();
    if (name.ends_with(".accepted.txt")) ++accepted;
    if (name.ends_with(".rejected.txt")) ++rejected;
  }
  EXPECT_EQ(accepted, 5);
  EXPECT_EQ(rejected, 5);
  EXPECT_TRUE(fs::exists(out / "sports/doc1.accepted.txt"));
  const auto stats = nlohmann::json::parse(ReadFile(out / "stats.json"));
  EXPECT_EQ(stats["overall"]["n_documents"], 5);
  EXPECT_EQ(stats["per_domain"].size(), 5u);
  for (const auto& [name, d] : stats["per_domain"].items()) EXPECT_EQ(d["n_documents"], 1) << name;

  std::size_t lines = 0;
  const std::string reports = ReadFile(out / "reports.jsonl");
  for (char c : reports) lines += c == '\n';
  EXPECT_EQ(lines, 5u);
}

TEST(CliTest, MissingDictionaryIsNamed) {
  TempDir out;
  std::vector<std::string> args = {"run", kFixtures + "/corpus", "--stoplist",
                                   kGolden + "/stoplist.txt", "--dict", "/nonexistent/dict.txt",
                                   "--gazetteer", kGolden + "/gazetteer.txt", "--out",
                                   out.path().string()};
  const Result r = Cli(args);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/nonexistent/dict.txt"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("dictionary"), std::string::npos) << r.err;
}

TEST(CliTest, GoldenDocumentByteExact) {
  TempDir out;
  const Result r = RunPipeline(kGolden + "/sample_input.txt", out.path(), {"--keep-intermediate"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadFile(out / "sample_input.accepted.txt"), ReadFile(kGolden + "/sample_accepted.txt"));
  EXPECT_EQ(ReadFile(out / "sample_input.rejected.txt"), ReadFile(kGolden + "/sample_rejected.txt"));
  for (const char* stage : {"stripped", "deduped", "filtered", "remaining"}) {
    EXPECT_TRUE(fs::exists(out / (std::string("sample_input.") + stage + ".txt"))) << stage;
  }
  const auto report = nlohmann::json::parse(ReadFile(out / "reports.jsonl"));
  EXPECT_EQ(report["n_tokens"], 61);
  EXPECT_EQ(report["n_duplicates"], 12);
  EXPECT_EQ(report["n_stopwords"], 21);
  EXPECT_EQ(report["n_dict"], 16);
  EXPECT_EQ(report["n_gaz"], 1);
  EXPECT_EQ(report["n_rejected"], 11);
}

TEST(CliTest, SkipsAndFailFast) {
  TempDir corpus, out1, out2;
  WriteFile(corpus / "sports/good.txt", "ਭਾਰਤ ਦੀ ਹਾਕੀ ਟੀਮ");
  WriteFile(corpus / "sports/latin.txt", "only latin text here");
  WriteFile(corpus / "health/broken.txt", "ਦਿਨ \xff\xfe");
  Result r = RunPipeline(corpus.path().string(), out1.path());
  EXPECT_EQ(r.code, 2) << r.err;
  EXPECT_EQ(r.out, "processed 1 of 3 documents, 2 skipped\n");
  EXPECT_NE(r.err.find("latin.txt"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("broken.txt"), std::string::npos) << r.err;
  const std::string reports = ReadFile(out1 / "reports.jsonl");
  EXPECT_NE(reports.find("\"error\":\"NotGurmukhi\""), std::string::npos);
  EXPECT_NE(reports.find("\"error\":\"InvalidEncoding\""), std::string::npos);
  EXPECT_TRUE(fs::exists(out1 / "sports/good.accepted.txt"));

  r = RunPipeline(corpus.path().string(), out2.path(), {"--fail-fast", "--workers", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(fs::exists(out2 / "reports.jsonl"));
}

TEST(CliTest, RerunsAreByteIdenticalAcrossWorkerCounts) {
  TempDir a, b, c;
  ASSERT_EQ(RunPipeline(kFixtures + "/corpus", a.path(), {"--workers", "1"}).code, 0);
  ASSERT_EQ(RunPipeline(kFixtures + "/corpus", b.path(), {"--workers", "4"}).code, 0);
  ASSERT_EQ(RunPipeline(kFixtures + "/corpus", c.path(), {}, "PUNJABI_PREP_WORKERS=3").code, 0);
  const std::string digest = TreeDigest(a.path());
  EXPECT_EQ(digest, TreeDigest(b.path()));
  EXPECT_EQ(digest, TreeDigest(c.path()));
  EXPECT_EQ(RunPipeline(kFixtures + "/corpus", a.path(), {"--workers", "0"}).code, 1);
}

TEST(CliTest, CsvFormatAndStatsSubcommand) {
  TempDir json_out, csv_out;
  ASSERT_EQ(RunPipeline(kFixtures + "/corpus", json_out.path()).code, 0);
  ASSERT_EQ(RunPipeline(kFixtures + "/corpus", csv_out.path(), {"--format", "csv"}).code, 0);
  EXPECT_TRUE(fs::exists(csv_out / "reports.csv"));
  EXPECT_TRUE(fs::exists(csv_out / "stats.csv"));

  Result r = Cli({"stats", (json_out / "reports.jsonl").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, ReadFile(json_out / "stats.json"));
  r = Cli({"stats", (csv_out / "reports.csv").string(), "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, ReadFile(csv_out / "stats.csv"));
  r = Cli({"stats", (csv_out / "reports.csv").string(), "-o", (csv_out / "again.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadFile(csv_out / "again.json"), ReadFile(json_out / "stats.json"));

  WriteFile(csv_out / "bad.jsonl", "{oops\n");
  r = Cli({"stats", (csv_out / "bad.jsonl").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.jsonl:1"), std::string::npos) << r.err;
}

TEST(CliTest, SplitIsDeterministic) {
  TempDir corpus, out;
  for (const char* d : {"agriculture", "entertainment", "health", "politics", "sports"}) {
    for (int i = 0; i < 10; ++i) {
      WriteFile(corpus / (std::string(d) + "/f" + std::to_string(i) + ".txt"), "ਦਿਨ");
    }
  }
  const std::vector<std::string> base = {"split", corpus.path().string(), "--ratio", "0.7",
                                         "--seed", "42", "--manifest"};
  auto args = base;
  args.push_back((out / "m1.tsv").string());
  Result r = Cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sports: 7 learning, 3 testing"), std::string::npos) << r.out;
  args = base;
  args.push_back((out / "m2.tsv").string());
  ASSERT_EQ(Cli(args).code, 0);
  const std::string m1 = ReadFile(out / "m1.tsv");
  EXPECT_EQ(m1, ReadFile(out / "m2.tsv"));
  std::size_t learning = 0;
  for (std::size_t pos = 0; (pos = m1.find("LEARNING\t", pos)) != std::string::npos; ++pos) {
    ++learning;
  }
  EXPECT_EQ(learning, 35u);

  r = Cli({"split", corpus.path().string(), "--ratio", "1.5", "--manifest",
           (out / "m3.tsv").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ratio"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(out / "m3.tsv"));
}

TEST(CliTest, LexiconCheck) {
  TempDir dir;
  WriteFile(dir / "ok.txt", "ਪੰਜਾਬ\nਭਾਰਤ\nਦਿਨ\n");
  Result r = Cli({"lexicon-check", (dir / "ok.txt").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 entries, 0 duplicates\n");

  WriteFile(dir / "dups.txt", "ਪੰਜਾਬ\nਭਾਰਤ\nਪੰਜਾਬ\nਭਾਰਤ\n");
  r = Cli({"lexicon-check", (dir / "dups.txt").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 entries, 2 duplicates\n");

  WriteFile(dir / "bad.txt", "ਪੰਜਾਬ\nPunjab\nਦਿਨ\n");
  r = Cli({"lexicon-check", (dir / "bad.txt").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.txt:2: InvalidEntry"), std::string::npos) << r.err;

  r = Cli({"lexicon-check", (dir / "missing.txt").string()});
  EXPECT_EQ(r.code, 1);
}

}  // namespace
