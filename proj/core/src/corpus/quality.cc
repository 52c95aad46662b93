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

#include "kotoba/corpus/quality.h"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "kotoba/corpus/heuristics.h"
#include "kotoba/errors.h"
#include "kotoba/io.h"
#include "kotoba/unicode.h"

namespace kotoba::corpus {
namespace {

using Json = nlohmann::ordered_json;

bool IsSentenceEnd(char32_t c) {
  switch (c) {
    case U'。':
    case U'．':
    case U'.':
    case U'!':
    case U'?':
    case U'！':
    case U'？':
    case U'\n':
      return true;
    default:
      return false;
  }
}

double MeanSentenceLength(std::u32string_view cps) {
  size_t sentences = 0;
  size_t chars = 0;
  size_t current = 0;
  for (const char32_t c : cps) {
    if (IsSentenceEnd(c)) {
      if (current > 0) {
        ++sentences;
        chars += current;
      }
      current = 0;
    } else if (!unicode::IsWhitespace(c) || current > 0) {
      ++current;
    }
  }
  if (current > 0) {
    ++sentences;
    chars += current;
  }
  return sentences == 0 ? 0.0
                        : static_cast<double>(chars) /
                              static_cast<double>(sentences);
}

double Logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::vector<double> FeatureVector(const std::vector<std::string>& names,
                                  std::string_view text) {
  const std::map<std::string, double> all = ExtractQualityFeatures(text);
  std::vector<double> v;
  v.reserve(names.size());
  for (const std::string& name : names) v.push_back(all.at(name));
  return v;
}

}  // namespace

std::map<std::string, double> ExtractQualityFeatures(std::string_view text) {
  const TextStats stats = ComputeTextStats(text);
  std::map<std::string, double> f;
  f["log_char_length"] = std::log1p(static_cast<double>(stats.chars));
  f["symbol_ratio"] = stats.symbol_ratio;
  f["repetition_ratio"] = stats.repetition_ratio;
  f["mean_sentence_length"] = MeanSentenceLength(unicode::DecodeUtf8(text));
  f["digit_ratio"] = stats.non_whitespace == 0
                         ? 0.0
                         : static_cast<double>(stats.digits) /
                               static_cast<double>(stats.non_whitespace);
  const size_t cjk = stats.kana + stats.han;
  f["kana_kanji_ratio"] =
      cjk == 0 ? 0.0
               : static_cast<double>(stats.kana) / static_cast<double>(cjk);
  return f;
}

double QualityModel::Score(std::string_view text) const {
  const std::vector<double> x = FeatureVector(features, text);
  double z = bias;
  for (size_t i = 0; i < x.size(); ++i) z += weights[i] * x[i];
  return Logistic(z);
}

void ValidateQualityModel(const QualityModel& model) {
  std::string problems;
  auto add = [&problems](const std::string& msg) {
    if (!problems.empty()) problems += "; ";
    problems += msg;
  };
  std::set<std::string> seen;
  for (const std::string& name : model.features) {
    if (std::find(kQualityFeatureNames.begin(), kQualityFeatureNames.end(),
                  name) == kQualityFeatureNames.end()) {
      add("unknown feature '" + name + "'");
    } else if (!seen.insert(name).second) {
      add("feature '" + name + "' listed twice");
    }
  }
  if (model.weights.size() != model.features.size()) {
    add("weights must have one entry per feature");
  }
  for (const double w : model.weights) {
    if (!std::isfinite(w)) add("weights must be finite");
  }
  if (!std::isfinite(model.bias)) add("bias must be finite");
  if (!(model.threshold >= 0.0 && model.threshold <= 1.0)) {
    add("threshold must be in [0, 1]");
  }
  if (!problems.empty()) throw ConfigError("quality model: " + problems);
}

std::string SerializeQualityModel(const QualityModel& model) {
  ValidateQualityModel(model);
  Json j;
  j["version"] = kQualityModelVersion;
  j["features"] = model.features;
  j["weights"] = model.weights;
  j["bias"] = model.bias;
  j["threshold"] = model.threshold;
  return j.dump(2) + "\n";
}

QualityModel ParseQualityModel(std::string_view content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("quality model is not valid JSON: ") +
                      e.what());
  }
  if (!j.is_object()) throw FormatError("quality model must be an object");
  const auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer() ||
      version->get<int>() != kQualityModelVersion) {
    throw FormatError("quality model has an unsupported version");
  }
  QualityModel model;
  try {
    model.features = j.at("features").get<std::vector<std::string>>();
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    model.threshold = j.at("threshold").get<double>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("quality model: ") + e.what());
  }
  ValidateQualityModel(model);
  return model;
}

QualityModel LoadQualityModel(const std::string& path) {
  return ParseQualityModel(ReadFile(path));
}

void SaveQualityModel(const QualityModel& model, const std::string& path) {
  WriteFile(path, SerializeQualityModel(model));
}

std::pair<double, StageOutcome> ClassifyQuality(const Document& doc,
                                                const QualityModel& model) {
  const double score = model.Score(doc.text);
  StageOutcome outcome = Kept(doc, Stage::kClassifier);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", score);
  outcome.detail["score"] = buf;
  if (score < model.threshold) {
    outcome.verdict = Verdict::kDropped;
    outcome.reason = "low quality";
    outcome.detail["rule"] = "low quality";
  }
  return {score, std::move(outcome)};
}

QualityModel FitQualityModel(std::span<const std::string> texts,
                             std::span<const int> labels,
                             const FitOptions& options) {
  if (texts.empty() || texts.size() != labels.size()) {
    throw InvalidArgumentError(
        "need one label per text and at least one text");
  }
  QualityModel model;
  model.features.assign(kQualityFeatureNames.begin(),
                        kQualityFeatureNames.end());
  model.threshold = options.threshold;
  const size_t n = texts.size();
  const size_t d = model.features.size();

  std::vector<std::vector<double>> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = FeatureVector(model.features, texts[i]);
  std::vector<double> mean(d, 0.0);
  std::vector<double> scale(d, 0.0);
  for (size_t k = 0; k < d; ++k) {
    for (size_t i = 0; i < n; ++i) mean[k] += x[i][k];
    mean[k] /= static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
      scale[k] += (x[i][k] - mean[k]) * (x[i][k] - mean[k]);
    }
    scale[k] = std::sqrt(scale[k] / static_cast<double>(n));
    if (scale[k] < 1e-12) scale[k] = 1.0;
    for (size_t i = 0; i < n; ++i) x[i][k] = (x[i][k] - mean[k]) / scale[k];
  }

  std::vector<double> w(d, 0.0);
  double b = 0.0;
  std::vector<double> grad(d);
  for (int iter = 0; iter < options.iterations; ++iter) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_b = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double z = b;
      for (size_t k = 0; k < d; ++k) z += w[k] * x[i][k];
      const double err = Logistic(z) - (labels[i] != 0 ? 1.0 : 0.0);
      for (size_t k = 0; k < d; ++k) grad[k] += err * x[i][k];
      grad_b += err;
    }
    for (size_t k = 0; k < d; ++k) {
      w[k] -= options.learning_rate *
              (grad[k] / static_cast<double>(n) + options.l2 * w[k]);
    }
    b -= options.learning_rate * grad_b / static_cast<double>(n);
  }

  // Fold the standardization back into the weights.
  model.bias = b;
  model.weights.resize(d);
  for (size_t k = 0; k < d; ++k) {
    model.weights[k] = w[k] / scale[k];
    model.bias -= w[k] * mean[k] / scale[k];
  }
  return model;
}

}  // namespace kotoba::corpus
