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

// Logistic quality classifier over hand-named text features.
//
// Features:
//   log_char_length       ln(1 + scalar count)
//   symbol_ratio          as in TextStats
//   repetition_ratio      as in TextStats
//   mean_sentence_length  scalars per sentence; sentences end at 。．.!?！？
//                         or a line break
//   digit_ratio           decimal digits / non-whitespace scalars
//   kana_kanji_ratio      kana / (kana + Han), 0 for text without either

#ifndef KOTOBA_CORPUS_QUALITY_H_
#define KOTOBA_CORPUS_QUALITY_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kotoba/corpus/document.h"

namespace kotoba::corpus {

inline constexpr int kQualityModelVersion = 1;

inline constexpr std::array<std::string_view, 6> kQualityFeatureNames = {
    "log_char_length",     "symbol_ratio", "repetition_ratio",
    "mean_sentence_length", "digit_ratio",  "kana_kanji_ratio"};

std::map<std::string, double> ExtractQualityFeatures(std::string_view text);

struct QualityModel {
  std::vector<std::string> features;  // subset of kQualityFeatureNames
  std::vector<double> weights;        // parallel to `features`
  double bias = 0.0;
  double threshold = 0.5;

  // logistic(weights . features + bias)
  double Score(std::string_view text) const;

  bool operator==(const QualityModel&) const = default;
};

// Throws ConfigError for unknown or repeated feature names, a weight count
// that differs from the feature count, non-finite values, or a threshold
// outside [0, 1].
void ValidateQualityModel(const QualityModel& model);

// Artifact: {"version": 1, "features": [...], "weights": [...], "bias": b,
// "threshold": t}. Parse validates and throws FormatError/ConfigError.
std::string SerializeQualityModel(const QualityModel& model);
QualityModel ParseQualityModel(std::string_view content);
QualityModel LoadQualityModel(const std::string& path);
void SaveQualityModel(const QualityModel& model, const std::string& path);

// Kept iff score >= threshold; the score is always in detail["score"].
std::pair<double, StageOutcome> ClassifyQuality(const Document& doc,
                                                const QualityModel& model);

struct FitOptions {
  int iterations = 2000;
  double learning_rate = 0.5;
  double l2 = 1e-3;
  double threshold = 0.5;
};

// Full-batch gradient descent on standardized features; the returned
// weights apply to raw feature values. Deterministic. Labels are 1 for
// high quality. Throws InvalidArgumentError for mismatched or empty input.
QualityModel FitQualityModel(std::span<const std::string> texts,
                             std::span<const int> labels,
                             const FitOptions& options = {});

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_QUALITY_H_
