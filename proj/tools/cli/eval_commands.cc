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

// eval: run a task suite, or aggregate precomputed task values.

#include <cstdlib>
#include <memory>

#include "commands.h"
#include "kotoba/errors.h"
#include "kotoba/eval/aggregate.h"
#include "kotoba/eval/http_scorer.h"
#include "kotoba/eval/mock_scorer.h"
#include "kotoba/eval/runner.h"
#include "kotoba/eval/task.h"
#include "kotoba/io.h"

namespace kotoba::cli {

CommandRunner AddEval(CLI::App& app) {
  struct Options {
    CommonOptions common;
    std::string suite;
    std::string aggregate_only;
    std::string scorer = "mock";
    std::string mock_table;
    std::string endpoint;
    double timeout = 30.0;
    int retries = 2;
    std::string out;
    bool lenient = false;
  };
  auto o = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand("eval", "Evaluate a task suite");
  auto* suite = sub->add_option("--suite", o->suite, "Suite definition");
  auto* aggregate = sub->add_option(
      "--aggregate-only", o->aggregate_only,
      "Aggregate task values from a file instead of running a suite");
  suite->excludes(aggregate);
  sub->add_option("--scorer", o->scorer, "Scorer backend")
      ->check(CLI::IsMember({"mock", "http"}));
  sub->add_option("--mock-table", o->mock_table, "Mock scorer definition");
  sub->add_option("--endpoint", o->endpoint,
                  std::string("Scorer base URL; $") + eval::kScorerUrlEnv +
                      " takes precedence");
  sub->add_option("--timeout", o->timeout, "HTTP timeout in seconds")
      ->check(CLI::PositiveNumber);
  sub->add_option("--retries", o->retries, "HTTP retries")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out", o->out, "Suite report to write (JSON)");
  sub->add_flag("--lenient", o->lenient,
                "Count scorer failures as wrong answers");
  AddCommonOptions(sub, &o->common, "table");

  return [o](std::ostream& out) {
    eval::SuiteReport report;
    if (!o->aggregate_only.empty()) {
      report = eval::Aggregate(
          eval::ParseMetricResults(ReadFile(o->aggregate_only)));
    } else {
      if (o->suite.empty()) {
        throw ConfigError("one of --suite or --aggregate-only is required");
      }
      const eval::Suite suite = eval::LoadSuite(o->suite);
      std::unique_ptr<eval::ModelScorer> scorer;
      if (o->scorer == "mock") {
        if (o->mock_table.empty()) {
          throw ConfigError("--scorer mock needs --mock-table");
        }
        scorer = std::make_unique<eval::MockScorer>(
            eval::MockScorer::Load(o->mock_table));
      } else {
        std::string url = o->endpoint;
        if (const char* env = std::getenv(eval::kScorerUrlEnv);
            env != nullptr && *env != '\0') {
          url = env;
        }
        if (url.empty()) {
          throw ConfigError(std::string("--scorer http needs --endpoint or $") +
                            eval::kScorerUrlEnv);
        }
        scorer = std::make_unique<eval::HttpScorer>(
            url, eval::HttpScorerOptions{o->timeout, o->retries});
      }
      eval::RunOptions options;
      options.workers = o->common.workers;
      options.lenient = o->lenient;
      report = eval::RunSuite(*scorer, suite, options).report;
    }

    const std::string json = eval::SerializeSuiteReport(report);
    if (!o->out.empty()) WriteFile(o->out, json);
    out << (o->common.format == "json" ? json
                                       : eval::FormatSuiteTable(report));
    return 0;
  };
}

}  // namespace kotoba::cli
