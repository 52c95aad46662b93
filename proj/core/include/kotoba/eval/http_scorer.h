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

// Scorer backed by an HTTP completion/likelihood service.
//
//   POST {base}/loglikelihood  {"context", "continuation"} -> {"loglikelihood"}
//   POST {base}/generate       {"context", "stop_sequences", "max_new_tokens"}
//                              -> {"text"}

#ifndef KOTOBA_EVAL_HTTP_SCORER_H_
#define KOTOBA_EVAL_HTTP_SCORER_H_

#include <string>
#include <string_view>

#include "kotoba/eval/scorer.h"

namespace kotoba::eval {

inline constexpr char kScorerUrlEnv[] = "KOTOBA_SCORER_URL";

struct HttpScorerOptions {
  double timeout_seconds = 30.0;
  int retries = 2;  // extra attempts after a connection failure or 5xx
};

class HttpScorer : public ModelScorer {
 public:
  // `base_url` is http://host[:port][/prefix]. Throws ConfigError for other
  // schemes or a malformed URL.
  explicit HttpScorer(std::string base_url, HttpScorerOptions options = {});

  // Throws BackendUnavailableError when the service cannot be reached after
  // all retries, ScorerError for any other bad response.
  double LogLikelihood(std::string_view context,
                       std::string_view continuation) override;
  std::string Generate(std::string_view context,
                       std::span<const std::string> stop_sequences,
                       int max_new_tokens) override;
  bool thread_safe() const override { return false; }

 private:
  std::string Post(const std::string& endpoint, const std::string& body);

  std::string origin_;  // scheme://host:port
  std::string prefix_;  // path without trailing '/'
  HttpScorerOptions options_;
};

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_HTTP_SCORER_H_
