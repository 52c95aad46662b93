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

// Subcommand registration shared by the CLI translation units.

#ifndef KOTOBA_TOOLS_CLI_COMMANDS_H_
#define KOTOBA_TOOLS_CLI_COMMANDS_H_

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <string>

namespace kotoba::cli {

// Options every subcommand accepts.
struct CommonOptions {
  int workers = 1;
  uint64_t seed = 42;
  std::string format = "table";
  CLI::Option* seed_option = nullptr;

  bool seed_given() const { return seed_option->count() > 0; }
};

// Each Add* registers one subcommand and returns the function that runs it
// after a successful parse. Kotoba exceptions escaping the runner are
// mapped to exit codes by RunCli.
using CommandRunner = std::function<int(std::ostream& out)>;

void AddCommonOptions(CLI::App* sub, CommonOptions* common,
                      const std::string& default_format);

CommandRunner AddTrainTokenizer(CLI::App& app);
CommandRunner AddExtendVocab(CLI::App& app);
CommandRunner AddMeasureCpt(CLI::App& app);
CommandRunner AddFilterCorpus(CLI::App& app);
CommandRunner AddTrainQuality(CLI::App& app);
CommandRunner AddEval(CLI::App& app);

}  // namespace kotoba::cli

#endif  // KOTOBA_TOOLS_CLI_COMMANDS_H_
