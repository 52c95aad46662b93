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

// The corpus curation pipeline.

#ifndef KOTOBA_CORPUS_PIPELINE_H_
#define KOTOBA_CORPUS_PIPELINE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kotoba/corpus/document.h"
#include "kotoba/corpus/heuristics.h"
#include "kotoba/corpus/minhash.h"
#include "kotoba/corpus/pii.h"
#include "kotoba/corpus/quality.h"
#include "kotoba/tokenizer/tokenizer.h"

namespace kotoba::corpus {

inline constexpr int kPipelineReportVersion = 1;
inline constexpr int kPipelineConfigVersion = 1;

struct PipelineConfig {
  std::array<bool, kAllStages.size()> enabled = {true, true, true,
                                                 true, true, true};
  MinHashParams near_dedup;
  HeuristicParams heuristics;
  std::vector<PiiCategory> extra_pii;
  // Overrides the quality model's own threshold when set.
  std::optional<double> classifier_threshold;
  // Artifact paths; resolved by the caller.
  std::string quality_model_path;
  std::string tokenizer_path;

  bool IsEnabled(Stage stage) const {
    return enabled[static_cast<size_t>(stage)];
  }
  void SetEnabled(Stage stage, bool on) {
    enabled[static_cast<size_t>(stage)] = on;
  }
};

// Config file, every key optional:
//   {"version": 1,
//    "stages": {"normalize": true, ...},
//    "near_dedup": {"shingle_size", "num_permutations", "num_bands",
//                   "jaccard_threshold"},
//    "heuristics": {"min_chars", "max_chars", "max_symbol_ratio",
//                   "max_repetition_ratio"},
//    "classifier": {"model": path, "threshold": t},
//    "pii": {"extra": [{"name", "pattern", "placeholder"}]},
//    "tokenizer": path}
// Unknown keys, wrong types and invalid values are all reported in a
// single ConfigError naming each offending field. The MinHash seed is not
// part of the file; callers set near_dedup.seed.
PipelineConfig ParsePipelineConfig(std::string_view content);

// Throws ConfigError listing every invalid field.
void ValidatePipelineConfig(const PipelineConfig& config);

struct StageCounts {
  Stage stage = Stage::kNormalize;
  uint64_t seen = 0;
  uint64_t kept = 0;  // includes modified
  uint64_t dropped = 0;
  uint64_t modified = 0;
  std::map<std::string, uint64_t> drop_rules;

  bool operator==(const StageCounts&) const = default;
};

struct PipelineReport {
  uint64_t documents_in = 0;
  uint64_t decode_failures = 0;
  std::vector<StageCounts> stages;  // enabled stages, in execution order
  std::map<std::string, uint64_t> redactions;
  uint64_t total_documents_out = 0;
  uint64_t total_chars_out = 0;
  std::optional<uint64_t> total_tokens_out;  // absent without a tokenizer

  bool operator==(const PipelineReport&) const = default;
};

std::string SerializePipelineReport(const PipelineReport& report);

struct PipelineResult {
  std::vector<Document> output;  // survivors, in input order
  PipelineReport report;
  // Outcomes of every input document, grouped per input position.
  std::vector<std::vector<StageOutcome>> outcomes;
  // Per output document: stage name -> verdict name.
  std::vector<std::map<std::string, std::string>> annotations;
};

struct PipelineResources {
  const tokenizer::Tokenizer* tokenizer = nullptr;
  const QualityModel* quality_model = nullptr;  // required by the classifier
};

// Records with a decode error, or reusing an earlier doc_id, are dropped
// up front with a normalize-stage outcome whose reason is "decode failure";
// they are counted in decode_failures and not in any stage. Output and
// report are identical for every worker count.
PipelineResult RunPipeline(std::vector<Document> docs,
                           const PipelineConfig& config,
                           const PipelineResources& resources,
                           int workers = 1);

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_PIPELINE_H_
