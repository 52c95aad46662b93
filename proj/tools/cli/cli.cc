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

#include "cli.h"

#include <algorithm>
#include <map>

#include "commands.h"
#include "kotoba/errors.h"

namespace kotoba::cli {

void AddCommonOptions(CLI::App* sub, CommonOptions* common,
                      const std::string& default_format) {
  common->format = default_format;
  sub->add_option("--workers", common->workers, "Worker threads")
      ->check(CLI::Range(1, 1024));
  common->seed_option =
      sub->add_option("--seed", common->seed, "Seed for all randomness");
  sub->add_option("--format", common->format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"kotoba: tokenizer, corpus and evaluation tools", "kotoba"};
  app.require_subcommand(1);
  app.set_version_flag("--version", KOTOBA_VERSION);

  std::map<std::string, CommandRunner> runners;
  runners["train-tokenizer"] = AddTrainTokenizer(app);
  runners["extend-vocab"] = AddExtendVocab(app);
  runners["measure-cpt"] = AddMeasureCpt(app);
  runners["filter-corpus"] = AddFilterCorpus(app);
  runners["train-quality"] = AddTrainQuality(app);
  runners["eval"] = AddEval(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    return runners.at(name)(out);
  } catch (const ScorerError& e) {
    err << "kotoba " << name << ": error: " << e.what() << "\n";
    return kExitBackendError;
  } catch (const Error& e) {
    err << "kotoba " << name << ": error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "kotoba " << name << ": internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace kotoba::cli
