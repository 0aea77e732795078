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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "punjabi_prep/error.hpp"
#include "punjabi_prep/term_list.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"
#include "support/temp_dir.hpp"

namespace punjabi_prep {
namespace {

using ::punjabi_prep::testing::ReadFile;
using ::punjabi_prep::testing::Rng;
using ::punjabi_prep::testing::TempDir;

constexpr const char* kGolden = PUNJABI_PREP_FIXTURES_DIR "/golden";

std::vector<std::string> Texts(const std::vector<Term>& terms) {
  std::vector<std::string> out;
  for (const auto& t : terms) out.push_back(t.text());
  return out;
}

std::vector<Term> Terms(const std::vector<std::string>& texts) {
  std::vector<Term> out;
  for (const auto& t : texts) out.emplace_back(t);
  return out;
}

const Resources& Golden() {
  static const Resources res =
      Resources::Load(std::string(kGolden) + "/stoplist.txt",
                      std::string(kGolden) + "/dictionary.txt",
                      std::string(kGolden) + "/gazetteer.txt");
  return res;
}

DocumentReport Process(std::string text, const Resources& res = Golden()) {
  return preprocess_document(RawDocument{std::move(text), std::nullopt, std::nullopt}, res);
}

TEST(PreprocessTest, GoldenSample) {
  const RawDocument doc = LoadDocument(std::string(kGolden) + "/sample_input.txt");
  const DocumentReport r = preprocess_document(doc, Golden());
  const std::vector<std::string> expected = {
      "ਦੁਨੀਆਂ", "ਰੁਜ਼ਗਾਰ", "ਸਕੀਮ", "ਮਹਾਤਮਾ", "ਗਾਂਧੀ", "ਰਾਸ਼ਟਰੀ", "ਪੇਂਡੂ", "ਪੰਜਾਬ", "ਸਿਆਸੀ",
      "ਕਾਨੂੰਨ", "ਦਿਨ", "ਪ੍ਰਾਪਤ", "ਸੰਵਿਧਾਨਕ", "ਹੱਕ", "ਮੰਗ", "ਸਰਕਾਰ", "ਮਨਰੇਗਾ"};
  EXPECT_EQ(Texts(r.accepted), expected);
  EXPECT_EQ(JoinTerms(r.accepted), ReadFile(std::string(kGolden) + "/sample_accepted.txt"));
  EXPECT_EQ(JoinTerms(r.rejected), ReadFile(std::string(kGolden) + "/sample_rejected.txt"));
  EXPECT_EQ(r.n_tokens, 61u);
  EXPECT_EQ(r.n_duplicates, 12u);
  EXPECT_EQ(r.n_stopwords, 21u);
  EXPECT_EQ(r.n_dict, 16u);
  EXPECT_EQ(r.n_gaz, 1u);
  EXPECT_EQ(r.n_rejected, 11u);
  EXPECT_TRUE(r.conserves());
  EXPECT_EQ(r.source_path, doc.source_path->generic_string());
}

TEST(PreprocessTest, DegenerateDocuments) {
  for (const char* text : {"", "   \n\t"}) {
    const DocumentReport r = Process(text);
    EXPECT_EQ(r.n_tokens, 0u);
    EXPECT_TRUE(r.accepted.empty());
    EXPECT_TRUE(r.rejected.empty());
    EXPECT_TRUE(r.conserves());
  }
  try {
    Process("only latin 123");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotGurmukhi);
  }
  try {
    Process("ਦਿਨ\xff");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidEncoding);
  }
}

TEST(PreprocessTest, AcceptedOutputIsAFixedPoint) {
  const DocumentReport first =
      preprocess_document(LoadDocument(std::string(kGolden) + "/sample_input.txt"), Golden());
  const DocumentReport again = Process(JoinTerms(first.accepted));
  EXPECT_EQ(again.accepted, first.accepted);
  EXPECT_EQ(again.n_duplicates, 0u);
  EXPECT_EQ(again.n_stopwords, 0u);
  EXPECT_EQ(again.n_rejected, 0u);
}

// Step 3 runs before step 4: k copies of a stop word are k-1 duplicates
// and one stop word.
TEST(PreprocessTest, DedupRunsBeforeStopwordRemoval) {
  const DocumentReport base = Process("ਦਿਨ ਹੱਕ");
  for (std::size_t k = 1; k <= 10; ++k) {
    std::string text = "ਦਿਨ ਹੱਕ";
    for (std::size_t i = 0; i < k; ++i) text += " ਦੇ";
    const DocumentReport r = Process(text);
    EXPECT_EQ(r.n_duplicates, base.n_duplicates + k - 1);
    EXPECT_EQ(r.n_stopwords, base.n_stopwords + 1);
  }
}

TEST(PreprocessTest, KeepIntermediateStages) {
  const RawDocument doc{"ਦਿਨ ਦੇ ਦਿਨ ਗਾਂਧੀ ਮਨਰੇਗਾ ਬੇਰੁਖ਼ੀ", std::nullopt, std::nullopt};
  const DocumentReport r = preprocess_document(doc, Golden(), {.keep_intermediate = true});
  ASSERT_TRUE(r.stages.has_value());
  EXPECT_EQ(r.stages->stripped.size(), 6u);
  EXPECT_EQ(Texts(r.stages->deduped),
            (std::vector<std::string>{"ਦਿਨ", "ਦੇ", "ਗਾਂਧੀ", "ਮਨਰੇਗਾ", "ਬੇਰੁਖ਼ੀ"}));
  EXPECT_EQ(Texts(r.stages->filtered),
            (std::vector<std::string>{"ਦਿਨ", "ਗਾਂਧੀ", "ਮਨਰੇਗਾ", "ਬੇਰੁਖ਼ੀ"}));
  EXPECT_EQ(Texts(r.stages->remaining), (std::vector<std::string>{"ਮਨਰੇਗਾ", "ਬੇਰੁਖ਼ੀ"}));
  EXPECT_FALSE(preprocess_document(doc, Golden()).stages.has_value());
}

TEST(WriteOutputsTest, FormatAndNaming) {
  TempDir dir;
  DocumentReport r;
  r.source_path = "corpus/sports/match.txt";
  r.accepted = Terms({"ਦਿਨ", "ਹੱਕ"});
  const auto written = write_outputs(r, dir.path());
  ASSERT_EQ(written.size(), 2u);
  EXPECT_EQ(written[0], dir / "match.accepted.txt");
  EXPECT_EQ(written[1], dir / "match.rejected.txt");
  EXPECT_EQ(ReadFile(written[0]), "ਦਿਨ,ਹੱਕ");
  EXPECT_EQ(ReadFile(written[1]), "");
  EXPECT_TRUE(std::filesystem::exists(written[1]));
}

TEST(WriteOutputsTest, GoldenAcceptedFileIsByteExact) {
  TempDir dir;
  const DocumentReport r =
      preprocess_document(LoadDocument(std::string(kGolden) + "/sample_input.txt"), Golden(),
                          {.keep_intermediate = true});
  const auto written = write_outputs(r, dir.path());
  EXPECT_EQ(written.size(), 6u);
  EXPECT_EQ(ReadFile(dir / "sample_input.accepted.txt"),
            ReadFile(std::string(kGolden) + "/sample_accepted.txt"));
  EXPECT_EQ(ReadFile(dir / "sample_input.stripped.txt"), JoinTerms(r.stages->stripped));
  // Round trip through tokenize.
  EXPECT_EQ(tokenize(ReadFile(dir / "sample_input.accepted.txt")), r.accepted);
}

TEST(WriteOutputsTest, IoErrorNamesTheFile) {
  TempDir dir;
  testing::WriteFile(dir / "blocker", "x");
  DocumentReport r;
  try {
    write_outputs(r, dir / "blocker", "doc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_NE(std::string(e.what()).find("blocker"), std::string::npos);
  }
}

struct RandomCase {
  std::vector<std::string> stops, dict, gaz;
  std::string text;
};

RandomCase MakeCase(Rng& rng) {
  RandomCase c;
  const auto universe = testing::DistinctWords(rng, 80 + testing::Below(rng, 400));
  for (const auto& w : universe) {
    switch (testing::Below(rng, 6)) {
      case 0: c.stops.push_back(w); break;
      case 1:
      case 2: c.dict.push_back(w); break;
      case 3: c.gaz.push_back(w); break;
      default: break;
    }
    // Some overlap between the lists.
    if (testing::Below(rng, 20) == 0) c.gaz.push_back(w);
    if (testing::Below(rng, 30) == 0) c.stops.push_back(w);
  }
  std::vector<std::string> words;
  const std::size_t n = testing::Below(rng, 201);
  for (std::size_t i = 0; i < n; ++i) words.push_back(universe[testing::Below(rng, 40)]);
  c.text = testing::JoinWithNoise(rng, words);
  return c;
}

TEST(PreprocessPropertyTest, MatchesSinglePassReference) {
  Rng rng(53);
  for (int i = 0; i < 400; ++i) {
    const RandomCase c = MakeCase(rng);
    Resources res{StopList(Terms(c.stops)), Lexicon(LexiconKind::kDictionary, Terms(c.dict)),
                  Lexicon(LexiconKind::kGazetteer, Terms(c.gaz))};
    const auto ref = testing::ReferencePipeline(c.text, c.stops, c.dict, c.gaz);
    if (ref.n_tokens == 0) continue;  // all-noise input may be rejected
    const DocumentReport r = Process(c.text, res);
    ASSERT_EQ(r.n_tokens, ref.n_tokens);
    ASSERT_EQ(r.n_duplicates, ref.n_duplicates);
    ASSERT_EQ(r.n_stopwords, ref.n_stopwords);
    ASSERT_EQ(r.n_dict, ref.n_dict);
    ASSERT_EQ(r.n_gaz, ref.n_gaz);
    ASSERT_EQ(r.n_rejected, ref.n_rejected);
    ASSERT_EQ(Texts(r.accepted), ref.accepted);
    ASSERT_EQ(Texts(r.rejected), ref.rejected);
  }
}

TEST(PreprocessPropertyTest, ConservationAndProvenance) {
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    const RandomCase c = MakeCase(rng);
    Resources res{StopList(Terms(c.stops)), Lexicon(LexiconKind::kDictionary, Terms(c.dict)),
                  Lexicon(LexiconKind::kGazetteer, Terms(c.gaz))};
    DocumentReport r;
    try {
      r = Process(c.text, res);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::kNotGurmukhi);
      continue;
    }
    ASSERT_TRUE(r.conserves());
    ASSERT_EQ(r.accepted.size(), r.n_dict + r.n_gaz);
    ASSERT_EQ(r.rejected.size(), r.n_rejected);
    const auto tokens = gate_text(c.text);
    for (const auto& t : r.accepted) {
      ASSERT_NE(std::find(tokens.begin(), tokens.end(), t), tokens.end());
      ASSERT_EQ(std::find(r.rejected.begin(), r.rejected.end(), t), r.rejected.end());
    }
    for (const auto& t : r.rejected) {
      ASSERT_NE(std::find(tokens.begin(), tokens.end(), t), tokens.end());
    }
  }
}

TEST(PreprocessPropertyTest, ConcurrentRunsMatchSequential) {
  Rng rng(61);
  std::vector<std::string> docs;
  for (int i = 0; i < 64; ++i) {
    docs.push_back(testing::JoinWithNoise(rng, testing::DistinctWords(rng, 50)) + " ਦੇ ਦਿਨ ਦਿਨ");
  }
  std::vector<DocumentReport> sequential;
  for (const auto& d : docs) sequential.push_back(Process(d));

  std::vector<DocumentReport> parallel(docs.size());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < 8; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < docs.size(); i += 8) parallel[i] = Process(docs[i]);
      });
    }
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    EXPECT_EQ(parallel[i].accepted, sequential[i].accepted);
    EXPECT_EQ(parallel[i].rejected, sequential[i].rejected);
    EXPECT_EQ(parallel[i].n_duplicates, sequential[i].n_duplicates);
  }
}

}  // namespace
}  // namespace punjabi_prep
