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

// The model interface the harness evaluates against.

#ifndef KOTOBA_EVAL_SCORER_H_
#define KOTOBA_EVAL_SCORER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kotoba::eval {

class ModelScorer {
 public:
  virtual ~ModelScorer() = default;

  // Log-probability of `continuation` following `context`. Throws
  // ScorerError on failure.
  virtual double LogLikelihood(std::string_view context,
                               std::string_view continuation) = 0;

  // Greedy continuation of `context`.
  virtual std::string Generate(std::string_view context,
                               std::span<const std::string> stop_sequences,
                               int max_new_tokens) = 0;

  // False if calls must be serialized by the caller.
  virtual bool thread_safe() const = 0;
};

struct ChoiceScores {
  int chosen_index = 0;
  std::vector<double> scores;
};

// scores[i] = LogLikelihood(prompt, continuations[i]), divided by the
// continuation's byte length when `length_normalize` is set. The argmax
// wins; ties go to the lowest index. Throws InvalidArgumentError for fewer
// than two choices; scorer errors are rethrown naming the choice index.
ChoiceScores ScoreMultipleChoice(ModelScorer& scorer, std::string_view prompt,
                                 std::span<const std::string> continuations,
                                 bool length_normalize = false);

// Cuts `text` at the earliest occurrence of any stop sequence.
std::string TruncateAtStop(std::string_view text,
                           std::span<const std::string> stop_sequences);

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_SCORER_H_
