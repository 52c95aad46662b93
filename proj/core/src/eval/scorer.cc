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

#include "kotoba/eval/scorer.h"

#include <algorithm>

#include "kotoba/errors.h"

namespace kotoba::eval {

ChoiceScores ScoreMultipleChoice(ModelScorer& scorer, std::string_view prompt,
                                 std::span<const std::string> continuations,
                                 bool length_normalize) {
  if (continuations.size() < 2) {
    throw InvalidArgumentError("multiple choice needs at least two choices");
  }
  ChoiceScores result;
  result.scores.reserve(continuations.size());
  for (size_t i = 0; i < continuations.size(); ++i) {
    double score;
    try {
      score = scorer.LogLikelihood(prompt, continuations[i]);
    } catch (const BackendUnavailableError& e) {
      throw BackendUnavailableError("choice " + std::to_string(i) + ": " +
                                    e.what());
    } catch (const ScorerError& e) {
      throw ScorerError("choice " + std::to_string(i) + ": " + e.what());
    }
    if (length_normalize && !continuations[i].empty()) {
      score /= static_cast<double>(continuations[i].size());
    }
    result.scores.push_back(score);
    if (score > result.scores[result.chosen_index]) {
      result.chosen_index = static_cast<int>(i);
    }
  }
  return result;
}

std::string TruncateAtStop(std::string_view text,
                           std::span<const std::string> stop_sequences) {
  size_t cut = text.size();
  for (const std::string& stop : stop_sequences) {
    if (stop.empty()) continue;
    cut = std::min(cut, text.find(stop));
  }
  return std::string(text.substr(0, cut));
}

}  // namespace kotoba::eval
