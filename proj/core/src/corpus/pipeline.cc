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

#include "kotoba/corpus/pipeline.h"

#include <nlohmann/json.hpp>

#include <cmath>
#include <set>
#include <utility>

#include "kotoba/corpus/dedup.h"
#include "kotoba/corpus/normalize.h"
#include "kotoba/errors.h"
#include "kotoba/parallel.h"
#include "kotoba/tokenizer/cpt.h"
#include "kotoba/unicode.h"

namespace kotoba::corpus {
namespace {

using Json = nlohmann::ordered_json;

// Reads typed fields out of one JSON object, collecting every problem.
class FieldReader {
 public:
  FieldReader(const Json& object, std::string prefix,
              std::vector<std::string>* problems)
      : object_(object), prefix_(std::move(prefix)), problems_(problems) {}

  template <typename T>
  void Read(const char* key, T* out) {
    known_.insert(key);
    const auto it = object_.find(key);
    if (it == object_.end()) return;
    if constexpr (std::is_same_v<T, bool>) {
      if (it->is_boolean()) {
        *out = it->template get<bool>();
        return;
      }
    } else if constexpr (std::is_integral_v<T>) {
      if (it->is_number_integer() &&
          (std::is_signed_v<T> || it->template get<long long>() >= 0)) {
        *out = it->template get<T>();
        return;
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (it->is_number()) {
        *out = it->template get<T>();
        return;
      }
    } else {
      if (it->is_string()) {
        *out = it->template get<std::string>();
        return;
      }
    }
    Problem(key, "has the wrong type");
  }

  // Returns the sub-object under `key`, or nullptr (recording a problem if
  // the value is present but not an object).
  const Json* Object(const char* key) {
    known_.insert(key);
    const auto it = object_.find(key);
    if (it == object_.end()) return nullptr;
    if (!it->is_object()) {
      Problem(key, "must be an object");
      return nullptr;
    }
    return &*it;
  }

  const Json* Raw(const char* key) {
    known_.insert(key);
    const auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
  }

  void Problem(const std::string& key, const std::string& what) {
    problems_->push_back(prefix_ + key + " " + what);
  }

  void RejectUnknown() {
    for (const auto& [key, value] : object_.items()) {
      if (!known_.contains(key)) Problem(key, "is not a known field");
    }
  }

  std::string Path(const std::string& key) const { return prefix_ + key; }

 private:
  const Json& object_;
  std::string prefix_;
  std::vector<std::string>* problems_;
  std::set<std::string> known_;
};

std::string JoinProblems(const std::vector<std::string>& problems) {
  std::string out = "invalid pipeline config: ";
  for (size_t i = 0; i < problems.size(); ++i) {
    if (i > 0) out += "; ";
    out += problems[i];
  }
  return out;
}

// Collects ConfigError messages from a validator instead of throwing.
template <typename Fn>
void Collect(const char* section, Fn fn, std::vector<std::string>* problems) {
  try {
    fn();
  } catch (const ConfigError& e) {
    problems->push_back(std::string(section) + ": " + e.what());
  }
}

void CheckConfig(const PipelineConfig& config,
                 std::vector<std::string>* problems) {
  Collect("near_dedup", [&] { ValidateMinHashParams(config.near_dedup); },
          problems);
  Collect("heuristics", [&] { ValidateHeuristicParams(config.heuristics); },
          problems);
  Collect("pii", [&] { PiiRedactor redactor(config.extra_pii); }, problems);
  if (config.classifier_threshold &&
      !(*config.classifier_threshold >= 0.0 &&
        *config.classifier_threshold <= 1.0)) {
    problems->push_back("classifier.threshold must be in [0, 1]");
  }
}

}  // namespace

PipelineConfig ParsePipelineConfig(std::string_view content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("pipeline config is not valid JSON: ") +
                      e.what());
  }
  if (!j.is_object()) throw ConfigError("pipeline config must be an object");

  PipelineConfig config;
  std::vector<std::string> problems;
  FieldReader top(j, "", &problems);
  if (const Json* v = top.Raw("version");
      v != nullptr &&
      !(v->is_number_integer() && v->get<int>() == kPipelineConfigVersion)) {
    top.Problem("version", "must be " + std::to_string(kPipelineConfigVersion));
  }
  if (const Json* stages = top.Object("stages")) {
    FieldReader r(*stages, "stages.", &problems);
    for (const Stage stage : kAllStages) {
      bool on = config.IsEnabled(stage);
      r.Read(std::string(StageName(stage)).c_str(), &on);
      config.SetEnabled(stage, on);
    }
    r.RejectUnknown();
  }
  if (const Json* near = top.Object("near_dedup")) {
    FieldReader r(*near, "near_dedup.", &problems);
    r.Read("shingle_size", &config.near_dedup.shingle_size);
    r.Read("num_permutations", &config.near_dedup.num_permutations);
    r.Read("num_bands", &config.near_dedup.num_bands);
    r.Read("jaccard_threshold", &config.near_dedup.jaccard_threshold);
    r.RejectUnknown();
  }
  if (const Json* h = top.Object("heuristics")) {
    FieldReader r(*h, "heuristics.", &problems);
    r.Read("min_chars", &config.heuristics.min_chars);
    r.Read("max_chars", &config.heuristics.max_chars);
    r.Read("max_symbol_ratio", &config.heuristics.max_symbol_ratio);
    r.Read("max_repetition_ratio", &config.heuristics.max_repetition_ratio);
    r.RejectUnknown();
  }
  if (const Json* c = top.Object("classifier")) {
    FieldReader r(*c, "classifier.", &problems);
    r.Read("model", &config.quality_model_path);
    if (c->contains("threshold")) {
      double threshold = -1.0;
      r.Read("threshold", &threshold);
      config.classifier_threshold = threshold;
    }
    r.RejectUnknown();
  }
  if (const Json* pii = top.Object("pii")) {
    FieldReader r(*pii, "pii.", &problems);
    if (const Json* extra = r.Raw("extra")) {
      if (!extra->is_array()) {
        r.Problem("extra", "must be an array");
      } else {
        for (size_t i = 0; i < extra->size(); ++i) {
          const Json& item = (*extra)[i];
          const std::string prefix = "pii.extra[" + std::to_string(i) + "].";
          if (!item.is_object()) {
            problems.push_back(prefix.substr(0, prefix.size() - 1) +
                               " must be an object");
            continue;
          }
          FieldReader ir(item, prefix, &problems);
          PiiCategory category;
          ir.Read("name", &category.name);
          ir.Read("pattern", &category.pattern);
          ir.Read("placeholder", &category.placeholder);
          for (const char* key : {"name", "pattern", "placeholder"}) {
            if (!item.contains(key)) ir.Problem(key, "is required");
          }
          ir.RejectUnknown();
          config.extra_pii.push_back(std::move(category));
        }
      }
    }
    r.RejectUnknown();
  }
  top.Read("tokenizer", &config.tokenizer_path);
  top.RejectUnknown();

  CheckConfig(config, &problems);
  if (!problems.empty()) throw ConfigError(JoinProblems(problems));
  return config;
}

void ValidatePipelineConfig(const PipelineConfig& config) {
  std::vector<std::string> problems;
  CheckConfig(config, &problems);
  if (!problems.empty()) throw ConfigError(JoinProblems(problems));
}

std::string SerializePipelineReport(const PipelineReport& report) {
  Json j;
  j["version"] = kPipelineReportVersion;
  j["documents_in"] = report.documents_in;
  j["decode_failures"] = report.decode_failures;
  Json stages = Json::array();
  for (const StageCounts& s : report.stages) {
    Json stage;
    stage["stage"] = StageName(s.stage);
    stage["seen"] = s.seen;
    stage["kept"] = s.kept;
    stage["dropped"] = s.dropped;
    stage["modified"] = s.modified;
    Json rules = Json::object();
    for (const auto& [rule, count] : s.drop_rules) rules[rule] = count;
    stage["drop_rules"] = std::move(rules);
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  Json redactions = Json::object();
  for (const auto& [category, count] : report.redactions) {
    redactions[category] = count;
  }
  j["redactions"] = std::move(redactions);
  j["total_documents_out"] = report.total_documents_out;
  j["total_chars_out"] = report.total_chars_out;
  if (report.total_tokens_out) {
    j["total_tokens_out"] = *report.total_tokens_out;
  } else {
    j["total_tokens_out"] = nullptr;
  }
  return j.dump(2) + "\n";
}

PipelineResult RunPipeline(std::vector<Document> docs,
                           const PipelineConfig& config,
                           const PipelineResources& resources, int workers) {
  ValidatePipelineConfig(config);
  if (config.IsEnabled(Stage::kClassifier) &&
      resources.quality_model == nullptr) {
    throw ConfigError(
        "invalid pipeline config: classifier.model is required when the "
        "classifier stage is enabled");
  }
  QualityModel model;
  if (resources.quality_model != nullptr) {
    model = *resources.quality_model;
    if (config.classifier_threshold) {
      model.threshold = *config.classifier_threshold;
    }
    ValidateQualityModel(model);
  }
  const PiiRedactor redactor(config.extra_pii);

  PipelineResult result;
  PipelineReport& report = result.report;
  report.documents_in = docs.size();
  result.outcomes.resize(docs.size());

  // Documents still in the stream, with their input positions.
  std::vector<Document> live;
  std::vector<size_t> origin;
  std::set<std::string> ids;
  for (size_t i = 0; i < docs.size(); ++i) {
    Document& doc = docs[i];
    std::string error;
    if (doc.decode_error) {
      error = *doc.decode_error;
    } else if (!ids.insert(doc.doc_id).second) {
      error = "duplicate id";
    }
    if (!error.empty()) {
      ++report.decode_failures;
      StageOutcome outcome{doc.doc_id, Stage::kNormalize, Verdict::kDropped,
                           "decode failure", {{"error", error}}};
      result.outcomes[i].push_back(std::move(outcome));
      continue;
    }
    live.push_back(std::move(doc));
    origin.push_back(i);
  }

  if (config.IsEnabled(Stage::kPii)) {
    for (const std::string& name : redactor.category_names()) {
      report.redactions[name] = 0;
    }
  }

  for (const Stage stage : kAllStages) {
    if (!config.IsEnabled(stage)) continue;
    std::vector<StageOutcome> outcomes(live.size());
    switch (stage) {
      case Stage::kNormalize:
        ParallelFor(live.size(), workers, [&](size_t i) {
          auto [doc, outcome] = NormalizeDocument(std::move(live[i]));
          live[i] = std::move(doc);
          outcomes[i] = std::move(outcome);
        });
        break;
      case Stage::kPii:
        ParallelFor(live.size(), workers, [&](size_t i) {
          auto [doc, outcome] = redactor.Apply(std::move(live[i]));
          live[i] = std::move(doc);
          outcomes[i] = std::move(outcome);
        });
        break;
      case Stage::kHeuristics:
        ParallelFor(live.size(), workers, [&](size_t i) {
          outcomes[i] = ApplyHeuristics(live[i], config.heuristics);
        });
        break;
      case Stage::kClassifier:
        ParallelFor(live.size(), workers, [&](size_t i) {
          outcomes[i] = ClassifyQuality(live[i], model).second;
        });
        break;
      case Stage::kExactDedup:
      case Stage::kNearDedup: {
        std::vector<Document> copy = std::move(live);
        DedupResult dedup =
            stage == Stage::kExactDedup
                ? DedupExact(std::move(copy), workers)
                : DedupNear(std::move(copy), config.near_dedup, workers);
        outcomes = std::move(dedup.outcomes);
        // Rebuild `live` from the kept documents; positions line up with
        // the non-dropped outcomes.
        live.assign(outcomes.size(), Document{});
        size_t next = 0;
        for (size_t i = 0; i < outcomes.size(); ++i) {
          if (outcomes[i].verdict != Verdict::kDropped) {
            live[i] = std::move(dedup.kept[next++]);
          }
        }
        break;
      }
    }

    StageCounts counts;
    counts.stage = stage;
    counts.seen = live.size();
    std::vector<Document> next_live;
    std::vector<size_t> next_origin;
    for (size_t i = 0; i < live.size(); ++i) {
      StageOutcome& outcome = outcomes[i];
      if (stage == Stage::kPii && outcome.verdict == Verdict::kModified) {
        for (const auto& [category, count] : outcome.detail) {
          report.redactions[category] += std::stoull(count);
        }
      }
      if (outcome.verdict == Verdict::kDropped) {
        ++counts.dropped;
        const auto rule = outcome.detail.find("rule");
        ++counts.drop_rules[rule != outcome.detail.end() ? rule->second
                                                         : outcome.reason];
      } else {
        ++counts.kept;
        counts.modified += outcome.verdict == Verdict::kModified;
        next_live.push_back(std::move(live[i]));
        next_origin.push_back(origin[i]);
      }
      result.outcomes[origin[i]].push_back(std::move(outcome));
    }
    report.stages.push_back(std::move(counts));
    live = std::move(next_live);
    origin = std::move(next_origin);
  }

  std::vector<uint64_t> chars(live.size());
  std::vector<uint64_t> tokens(live.size());
  ParallelFor(live.size(), workers, [&](size_t i) {
    chars[i] = unicode::CountScalars(live[i].text);
    if (resources.tokenizer != nullptr) {
      tokens[i] = tokenizer::CountTokens(*resources.tokenizer, live[i].text);
    }
  });
  report.total_documents_out = live.size();
  for (size_t i = 0; i < live.size(); ++i) report.total_chars_out += chars[i];
  if (resources.tokenizer != nullptr) {
    uint64_t total = 0;
    for (const uint64_t t : tokens) total += t;
    report.total_tokens_out = total;
  }

  for (size_t i = 0; i < live.size(); ++i) {
    std::map<std::string, std::string> annotation;
    for (const StageOutcome& outcome : result.outcomes[origin[i]]) {
      annotation[std::string(StageName(outcome.stage))] =
          std::string(VerdictName(outcome.verdict));
    }
    result.annotations.push_back(std::move(annotation));
  }
  result.output = std::move(live);
  return result;
}

}  // namespace kotoba::corpus
