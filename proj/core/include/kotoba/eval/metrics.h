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

// Answer normalization, exact match and ROUGE-2.

#ifndef KOTOBA_EVAL_METRICS_H_
#define KOTOBA_EVAL_METRICS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kotoba/eval/task.h"

namespace kotoba::eval {

// NFKC; drop categories P* and S* and the emoji blocks U+1F300-U+1FAFF and
// U+2600-U+27BF; NFKC again, since a removal can leave a composable pair;
// collapse whitespace runs to one space and trim; lowercase Latin letters.
// Idempotent.
std::string NormalizeAnswer(std::string_view text);

bool ExactMatch(std::string_view prediction,
                std::span<const std::string> references);

// Units for ROUGE-2: non-whitespace scalars (kChar) or whitespace-separated
// tokens (kWhitespace).
std::vector<std::string> SegmentUnits(std::string_view text,
                                      Segmenter segmenter);

// Bigram F1 with clipped counts, in [0, 1]. 0 when either side has fewer
// than two units.
double Rouge2(std::string_view hypothesis, std::string_view reference,
              Segmenter segmenter);

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_METRICS_H_
