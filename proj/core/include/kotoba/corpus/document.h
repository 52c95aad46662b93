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

#ifndef KOTOBA_CORPUS_DOCUMENT_H_
#define KOTOBA_CORPUS_DOCUMENT_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace kotoba::corpus {

struct Document {
  std::string doc_id;
  std::string text;
  // Open metadata (source, language tag, timestamp, ...).
  std::map<std::string, std::string> meta;
  // Set when the input record could not be decoded; such documents are
  // dropped before the first stage.
  std::optional<std::string> decode_error;

  bool operator==(const Document&) const = default;
};

// Pipeline stages in execution order.
enum class Stage { kNormalize, kPii, kExactDedup, kNearDedup, kHeuristics,
                   kClassifier };
inline constexpr std::array<Stage, 6> kAllStages = {
    Stage::kNormalize, Stage::kPii,        Stage::kExactDedup,
    Stage::kNearDedup, Stage::kHeuristics, Stage::kClassifier};

std::string_view StageName(Stage stage);
std::optional<Stage> ParseStage(std::string_view name);

enum class Verdict { kKept, kDropped, kModified };
std::string_view VerdictName(Verdict verdict);

struct StageOutcome {
  std::string doc_id;
  Stage stage = Stage::kNormalize;
  Verdict verdict = Verdict::kKept;
  // Non-empty whenever verdict is kDropped.
  std::string reason;
  std::map<std::string, std::string> detail;

  bool operator==(const StageOutcome&) const = default;
};

inline StageOutcome Kept(const Document& doc, Stage stage) {
  return {doc.doc_id, stage, Verdict::kKept, "", {}};
}

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_DOCUMENT_H_
