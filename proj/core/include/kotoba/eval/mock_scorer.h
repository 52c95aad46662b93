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

// Deterministic scorer for tests and offline runs.

#ifndef KOTOBA_EVAL_MOCK_SCORER_H_
#define KOTOBA_EVAL_MOCK_SCORER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kotoba/eval/scorer.h"

namespace kotoba::eval {

// Two modes.
//
// Table: the first loglikelihood entry whose `contains` occurs in the
// context and whose `continuation` (if given) equals the continuation
// supplies the value; generation works the same way with `output`. An
// entry with `error` set throws ScorerError instead. Without a match the
// default is used, or ScorerError is thrown if there is none.
//
// Unigram: every unit of the continuation costs `cost_per_unit`, so the
// score is -cost * units, where units are scalar values or UTF-8 bytes.
// Generation returns the default output (empty when unset).
//
// File: {"version": 1, "mode": "table" | "unigram", "loglikelihood": [...],
// "generate": [...], "default_loglikelihood": x, "default_output": s,
// "cost_per_unit": c, "unit": "char" | "byte"}
class MockScorer : public ModelScorer {
 public:
  struct LikelihoodEntry {
    std::string contains;
    std::optional<std::string> continuation;
    double value = 0.0;
    std::optional<std::string> error;
  };
  struct GenerateEntry {
    std::string contains;
    std::string output;
    std::optional<std::string> error;
  };
  enum class Mode { kTable, kUnigram };
  enum class Unit { kChar, kByte };

  static MockScorer Table(std::vector<LikelihoodEntry> likelihood,
                          std::vector<GenerateEntry> generate);
  static MockScorer Unigram(double cost_per_unit, Unit unit = Unit::kChar);

  // Throws ConfigError.
  static MockScorer Parse(std::string_view content);
  static MockScorer Load(const std::string& path);

  double LogLikelihood(std::string_view context,
                       std::string_view continuation) override;
  std::string Generate(std::string_view context,
                       std::span<const std::string> stop_sequences,
                       int max_new_tokens) override;
  bool thread_safe() const override { return true; }

  std::optional<double> default_loglikelihood;
  std::optional<std::string> default_output;

 private:
  Mode mode_ = Mode::kTable;
  Unit unit_ = Unit::kChar;
  double cost_ = 1.0;
  std::vector<LikelihoodEntry> likelihood_;
  std::vector<GenerateEntry> generate_;
};

}  // namespace kotoba::eval

#endif  // KOTOBA_EVAL_MOCK_SCORER_H_
