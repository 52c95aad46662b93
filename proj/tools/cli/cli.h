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

// The kotoba command-line interface as a library, so tests can drive it
// in-process.

#ifndef KOTOBA_TOOLS_CLI_CLI_H_
#define KOTOBA_TOOLS_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace kotoba::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBackendError = 2;

// `args` excludes the program name. Reports go to `out`, diagnostics to
// `err`; diagnostics never echo document text.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace kotoba::cli

#endif  // KOTOBA_TOOLS_CLI_CLI_H_
