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

#ifndef KOTOBA_CORPUS_HEURISTICS_H_
#define KOTOBA_CORPUS_HEURISTICS_H_

#include <cstddef>
#include <string_view>

#include "kotoba/corpus/document.h"

namespace kotoba::corpus {

struct HeuristicParams {
  size_t min_chars = 50;
  size_t max_chars = 200000;
  double max_symbol_ratio = 0.3;
  double max_repetition_ratio = 0.5;
};

// Throws ConfigError when min_chars > max_chars or a ratio is outside [0, 1].
void ValidateHeuristicParams(const HeuristicParams& params);

struct TextStats {
  size_t chars = 0;  // scalar values
  // Among non-whitespace scalars, the fraction that are not letters (which
  // covers kana and CJK ideographs), decimal digits or punctuation (P*).
  double symbol_ratio = 0.0;
  // 1 - distinct/total over scalar 4-grams; 0 when there are none.
  double repetition_ratio = 0.0;
  size_t digits = 0;
  size_t kana = 0;
  size_t han = 0;
  size_t non_whitespace = 0;
};

TextStats ComputeTextStats(std::string_view text);

// Rules are checked in the order "min length", "max length",
// "symbol ratio", "repetition"; the first violation is the drop reason.
StageOutcome ApplyHeuristics(const Document& doc,
                             const HeuristicParams& params);

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_HEURISTICS_H_
