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

#ifndef PUNJABI_PREP_CLI_HPP_
#define PUNJABI_PREP_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "punjabi_prep/report_io.hpp"

namespace punjabi_prep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitPartial = 2;

// Overrides the default worker count (hardware concurrency) for `run`.
inline constexpr const char* kWorkersEnv = "PUNJABI_PREP_WORKERS";

struct RunConfig {
  std::filesystem::path input;  // a document or a corpus root
  std::filesystem::path stoplist;
  std::filesystem::path dictionary;
  std::filesystem::path gazetteer;
  std::filesystem::path out_dir;
  ReportFormat format = ReportFormat::kJson;
  bool keep_intermediate = false;
  bool fail_fast = false;
  unsigned workers = 1;
};

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_split(const std::filesystem::path& corpus_root, double ratio, std::uint64_t seed,
              const std::filesystem::path& manifest_path, std::ostream& out, std::ostream& err);
int cmd_stats(const std::filesystem::path& reports_path, ReportFormat format,
              const std::filesystem::path& output_path, std::ostream& out, std::ostream& err);
int cmd_lexicon_check(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

// Full command line, argv[0] included.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace punjabi_prep

#endif  // PUNJABI_PREP_CLI_HPP_
