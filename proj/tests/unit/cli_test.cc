// Copyright 2026 The Kotoba Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "kotoba/io.h"
#include "test_util.h"

namespace kotoba::cli {
namespace {

using nlohmann::json;
using testing::FixturePath;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, HelpAndUnknownCommands) {
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"train-tokenizer", "--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Cli({}).code, kExitInputError);
  EXPECT_EQ(Cli({"measure-cpt", "--workers", "0"}).code, kExitInputError);
}

TEST(CliTest, TokenizerWorkflow) {
  testing::TempDir dir;
  const std::string base = dir.path("base.json");
  const std::string ext = dir.path("ext.json");
  CliRun r = Cli({"train-tokenizer", "--corpus", FixturePath("en_corpus.txt"),
               "--merges", "100", "--out", base});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  r = Cli({"extend-vocab", "--base", base, "--budget", "200", "--corpus",
           FixturePath("ja_sample.txt"), "--out", ext, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  r = Cli({"measure-cpt", "--tokenizer", ext, "--corpus",
           FixturePath("ja_sample.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_GT(report["rate"].get<double>(), 0.0);
  EXPECT_EQ(report["version"], 1);
}

TEST(CliTest, MissingInputIsExitOne) {
  testing::TempDir dir;
  const CliRun r = Cli({"train-tokenizer", "--corpus", dir.path("nope.txt"),
                     "--merges", "10", "--out", dir.path("t.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("nope.txt"), std::string::npos) << r.err;
  EXPECT_EQ(Cli({"eval", "--suite", dir.path("missing.json"), "--scorer", "mock",
                 "--mock-table", FixturePath("eval/mock_table.json")})
                .code,
            kExitInputError);
}

TEST(CliTest, FilterCorpusMatchesManifest) {
  testing::TempDir dir;
  const CliRun r = Cli({"filter-corpus", "--input", FixturePath("pipeline/docs.jsonl"),
                     "--output", dir.path("out.jsonl"), "--report",
                     dir.path("report.json"), "--config",
                     FixturePath("pipeline/config.json"), "--annotate"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(ReadFile(dir.path("report.json")));
  const json manifest = testing::ReadJson(FixturePath("pipeline/manifest.json"));
  EXPECT_EQ(report["total_documents_out"], manifest["total_documents_out"]);
  EXPECT_EQ(report["redactions"], manifest["redactions"]);
  const auto lines = SplitLines(ReadFile(dir.path("out.jsonl")));
  ASSERT_EQ(lines.size(), 75u);
  EXPECT_TRUE(json::parse(lines[0])["meta"].contains("pipeline"));
}

TEST(CliTest, InvalidConfigListsFields) {
  testing::TempDir dir;
  WriteFile(dir.path("bad.json"),
            R"({"version": 1, "near_dedup": {"num_bands": 7},
                "heuristics": {"max_symbol_ratio": 2}})");
  const CliRun r = Cli({"filter-corpus", "--input", FixturePath("pipeline/docs.jsonl"),
                     "--output", dir.path("o.jsonl"), "--report", dir.path("r.json"),
                     "--config", dir.path("bad.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("num_bands"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("max_symbol_ratio"), std::string::npos) << r.err;
}

TEST(CliTest, DiagnosticsDoNotEchoDocumentText) {
  testing::TempDir dir;
  WriteFile(dir.path("docs.jsonl"),
            "{\"id\": \"a\", \"text\": \"secret@example.com\"}\n");
  const CliRun r = Cli({"filter-corpus", "--input", dir.path("docs.jsonl"),
                     "--output", dir.path("o.jsonl"), "--report", dir.path("r.json"),
                     "--stages", "normalize,pii,nonsense"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_EQ(r.err.find("secret"), std::string::npos) << r.err;
}

TEST(CliTest, EvalFixtureSuite) {
  const CliRun r = Cli({"eval", "--suite", FixturePath("eval/suite.json"), "--scorer",
                     "mock", "--mock-table", FixturePath("eval/mock_table.json"),
                     "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report["tasks"][0]["value"], 75.0);
  EXPECT_EQ(report["tasks"][1]["value"], 75.0);
  EXPECT_EQ(report["avg_excl_display"], "75.00");
}

TEST(CliTest, AggregateOnly) {
  const CliRun r = Cli({"eval", "--aggregate-only",
                     FixturePath("eval/aggregate_row.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report["avg_display"], "62.83");
  EXPECT_EQ(report["avg_excl_display"], "69.80");
}

TEST(CliTest, UnreachableScorerIsExitTwo) {
  const CliRun r = Cli({"eval", "--suite", FixturePath("eval/suite.json"), "--scorer",
                     "http", "--endpoint", "http://127.0.0.1:1", "--timeout", "1",
                     "--retries", "0"});
  EXPECT_EQ(r.code, kExitBackendError) << r.err;
}

TEST(CliTest, ScorerFailureIsExitTwoUnlessLenient) {
  const std::vector<std::string> base = {
      "eval", "--suite", FixturePath("eval/broken_suite.json"), "--scorer", "mock",
      "--mock-table", FixturePath("eval/mock_table.json"), "--format", "json"};
  EXPECT_EQ(Cli(base).code, kExitBackendError);
  std::vector<std::string> lenient = base;
  lenient.push_back("--lenient");
  const CliRun r = Cli(lenient);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["tasks"][0]["failures"], 1);
}

TEST(CliTest, TrainQuality) {
  testing::TempDir dir;
  const CliRun r = Cli({"train-quality", "--data", FixturePath("quality/train.jsonl"),
                     "--out", dir.path("model.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json model = json::parse(ReadFile(dir.path("model.json")));
  EXPECT_EQ(model["version"], 1);
  EXPECT_EQ(model["features"].size(), 6u);
}

}  // namespace
}  // namespace kotoba::cli
