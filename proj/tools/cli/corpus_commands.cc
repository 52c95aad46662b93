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

// filter-corpus and train-quality.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <memory>

#include "commands.h"
#include "kotoba/corpus/jsonl.h"
#include "kotoba/corpus/pipeline.h"
#include "kotoba/corpus/quality.h"
#include "kotoba/errors.h"
#include "kotoba/io.h"
#include "kotoba/tokenizer/artifact.h"

namespace kotoba::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string ResolveAgainst(const std::string& config_path,
                           const std::string& file) {
  if (file.empty() || config_path.empty() ||
      std::filesystem::path(file).is_absolute()) {
    return file;
  }
  return (std::filesystem::path(config_path).parent_path() / file)
      .lexically_normal()
      .string();
}

void PrintReportTable(const corpus::PipelineReport& report,
                      std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %8s %8s %8s %8s\n", "stage",
                "seen", "kept", "dropped", "modified");
  out << line;
  for (const corpus::StageCounts& s : report.stages) {
    std::snprintf(line, sizeof(line), "%-12s %8llu %8llu %8llu %8llu\n",
                  std::string(corpus::StageName(s.stage)).c_str(),
                  static_cast<unsigned long long>(s.seen),
                  static_cast<unsigned long long>(s.kept),
                  static_cast<unsigned long long>(s.dropped),
                  static_cast<unsigned long long>(s.modified));
    out << line;
  }
  out << "documents in " << report.documents_in << ", out "
      << report.total_documents_out << ", decode failures "
      << report.decode_failures << "\n";
  if (report.total_tokens_out) {
    out << "tokens out " << *report.total_tokens_out << "\n";
  }
}

}  // namespace

CommandRunner AddFilterCorpus(CLI::App& app) {
  struct Options {
    CommonOptions common;
    std::string input;
    std::string output;
    std::string report;
    std::string config;
    std::vector<std::string> stages;
    std::string tokenizer;
    std::string quality_model;
    bool annotate = false;
  };
  auto o = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "filter-corpus", "Run the curation pipeline over a JSON-lines corpus");
  sub->add_option("--input", o->input, "Input documents (JSON lines)")
      ->required();
  sub->add_option("--output", o->output, "Surviving documents")->required();
  sub->add_option("--report", o->report, "Pipeline report (JSON)")
      ->required();
  sub->add_option("--config", o->config, "Pipeline config (JSON)");
  sub->add_option("--stages", o->stages,
                  "Comma-separated stages to run; overrides the config")
      ->delimiter(',');
  sub->add_option("--tokenizer", o->tokenizer,
                  "Tokenizer artifact for token accounting");
  sub->add_option("--quality-model", o->quality_model,
                  "Quality model artifact for the classifier stage");
  sub->add_flag("--annotate", o->annotate,
                "Record per-stage verdicts under meta.pipeline");
  AddCommonOptions(sub, &o->common, "table");

  return [o](std::ostream& out) {
    corpus::PipelineConfig config;
    if (!o->config.empty()) {
      config = corpus::ParsePipelineConfig(ReadFile(o->config));
      config.tokenizer_path = ResolveAgainst(o->config, config.tokenizer_path);
      config.quality_model_path =
          ResolveAgainst(o->config, config.quality_model_path);
    }
    if (!o->stages.empty()) {
      config.enabled.fill(false);
      for (const std::string& name : o->stages) {
        const auto stage = corpus::ParseStage(name);
        if (!stage) throw ConfigError("unknown stage '" + name + "'");
        config.SetEnabled(*stage, true);
      }
    }
    if (!o->tokenizer.empty()) config.tokenizer_path = o->tokenizer;
    if (!o->quality_model.empty()) config.quality_model_path = o->quality_model;
    config.near_dedup.seed = o->common.seed;

    std::optional<tokenizer::Tokenizer> tok;
    if (!config.tokenizer_path.empty()) {
      tok = tokenizer::LoadTokenizer(config.tokenizer_path);
    }
    std::optional<corpus::QualityModel> model;
    if (config.IsEnabled(corpus::Stage::kClassifier) &&
        !config.quality_model_path.empty()) {
      model = corpus::LoadQualityModel(config.quality_model_path);
    }
    corpus::PipelineResources resources;
    resources.tokenizer = tok ? &*tok : nullptr;
    resources.quality_model = model ? &*model : nullptr;

    std::vector<corpus::Document> docs = corpus::ReadDocuments(o->input);
    const corpus::PipelineResult result = corpus::RunPipeline(
        std::move(docs), config, resources, o->common.workers);

    std::string output;
    for (size_t i = 0; i < result.output.size(); ++i) {
      output += corpus::SerializeDocument(
          result.output[i],
          o->annotate ? result.annotations[i]
                      : std::map<std::string, std::string>{});
      output += "\n";
    }
    WriteFile(o->output, output);
    const std::string report = corpus::SerializePipelineReport(result.report);
    WriteFile(o->report, report);
    if (o->common.format == "json") {
      out << report;
    } else {
      PrintReportTable(result.report, out);
    }
    return 0;
  };
}

CommandRunner AddTrainQuality(CLI::App& app) {
  struct Options {
    CommonOptions common;
    std::string data;
    std::string out;
    double threshold = 0.5;
    int iterations = 2000;
  };
  auto o = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "train-quality", "Fit the logistic quality classifier");
  sub->add_option("--data", o->data,
                  "Labeled JSON lines: {\"text\": ..., \"label\": 0|1}")
      ->required();
  sub->add_option("--out", o->out, "Quality model artifact")->required();
  sub->add_option("--threshold", o->threshold, "Keep threshold")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--iterations", o->iterations, "Gradient descent steps")
      ->check(CLI::PositiveNumber);
  AddCommonOptions(sub, &o->common, "table");

  return [o](std::ostream& out) {
    std::vector<std::string> texts;
    std::vector<int> labels;
    const std::vector<std::string> lines = SplitLines(ReadFile(o->data));
    for (size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
      const std::string where = o->data + ":" + std::to_string(i + 1);
      try {
        const Json j = Json::parse(lines[i]);
        const int label = j.at("label").get<int>();
        if (label != 0 && label != 1) {
          throw FormatError(where + ": label must be 0 or 1");
        }
        texts.push_back(j.at("text").get<std::string>());
        labels.push_back(label);
      } catch (const Json::exception&) {
        throw FormatError(where + ": expected {\"text\": ..., \"label\": ...}");
      }
    }
    corpus::FitOptions options;
    options.threshold = o->threshold;
    options.iterations = o->iterations;
    const corpus::QualityModel model =
        corpus::FitQualityModel(texts, labels, options);
    corpus::SaveQualityModel(model, o->out);

    size_t correct = 0;
    for (size_t i = 0; i < texts.size(); ++i) {
      const bool keep = model.Score(texts[i]) >= model.threshold;
      correct += keep == (labels[i] == 1);
    }
    const double accuracy =
        static_cast<double>(correct) / static_cast<double>(texts.size());
    if (o->common.format == "json") {
      out << Json{{"documents", texts.size()},
                  {"training_accuracy", accuracy}}
                 .dump(2)
          << "\n";
    } else {
      out << "documents          " << texts.size() << "\n"
          << "training accuracy  " << accuracy << "\n";
    }
    return 0;
  };
}

}  // namespace kotoba::cli
