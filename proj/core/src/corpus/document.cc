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

#include "kotoba/corpus/document.h"

namespace kotoba::corpus {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kNormalize:
      return "normalize";
    case Stage::kPii:
      return "pii";
    case Stage::kExactDedup:
      return "exact_dedup";
    case Stage::kNearDedup:
      return "near_dedup";
    case Stage::kHeuristics:
      return "heuristics";
    case Stage::kClassifier:
      return "classifier";
  }
  return "normalize";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (Stage s : kAllStages) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kKept:
      return "kept";
    case Verdict::kDropped:
      return "dropped";
    case Verdict::kModified:
      return "modified";
  }
  return "kept";
}

}  // namespace kotoba::corpus
