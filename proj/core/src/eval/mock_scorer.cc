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

#include "kotoba/eval/mock_scorer.h"

#include <nlohmann/json.hpp>

#include "kotoba/errors.h"
#include "kotoba/io.h"
#include "kotoba/unicode.h"

namespace kotoba::eval {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::string> OptionalString(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

MockScorer MockScorer::Table(std::vector<LikelihoodEntry> likelihood,
                             std::vector<GenerateEntry> generate) {
  MockScorer scorer;
  scorer.mode_ = Mode::kTable;
  scorer.likelihood_ = std::move(likelihood);
  scorer.generate_ = std::move(generate);
  return scorer;
}

MockScorer MockScorer::Unigram(double cost_per_unit, Unit unit) {
  MockScorer scorer;
  scorer.mode_ = Mode::kUnigram;
  scorer.cost_ = cost_per_unit;
  scorer.unit_ = unit;
  return scorer;
}

MockScorer MockScorer::Parse(std::string_view content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("mock table is not valid JSON: ") +
                      e.what());
  }
  try {
    if (!j.is_object() || j.value("version", 0) != 1) {
      throw ConfigError("mock table needs \"version\": 1");
    }
    const std::string mode = j.value("mode", "table");
    MockScorer scorer;
    if (mode == "unigram") {
      const std::string unit = j.value("unit", "char");
      if (unit != "char" && unit != "byte") {
        throw ConfigError("mock table: unit must be char or byte");
      }
      scorer = Unigram(j.value("cost_per_unit", 1.0),
                       unit == "char" ? Unit::kChar : Unit::kByte);
    } else if (mode == "table") {
      std::vector<LikelihoodEntry> likelihood;
      for (const Json& e : j.value("loglikelihood", Json::array())) {
        likelihood.push_back({e.value("contains", ""),
                              OptionalString(e, "continuation"),
                              e.value("value", 0.0), OptionalString(e, "error")});
      }
      std::vector<GenerateEntry> generate;
      for (const Json& e : j.value("generate", Json::array())) {
        generate.push_back({e.value("contains", ""), e.value("output", ""),
                            OptionalString(e, "error")});
      }
      scorer = Table(std::move(likelihood), std::move(generate));
    } else {
      throw ConfigError("mock table: mode must be table or unigram");
    }
    if (const auto it = j.find("default_loglikelihood");
        it != j.end() && !it->is_null()) {
      scorer.default_loglikelihood = it->get<double>();
    }
    scorer.default_output = OptionalString(j, "default_output");
    return scorer;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("mock table: ") + e.what());
  }
}

MockScorer MockScorer::Load(const std::string& path) {
  return Parse(ReadFile(path));
}

double MockScorer::LogLikelihood(std::string_view context,
                                 std::string_view continuation) {
  if (mode_ == Mode::kUnigram) {
    const size_t units = unit_ == Unit::kChar
                             ? unicode::CountScalars(continuation)
                             : continuation.size();
    return -cost_ * static_cast<double>(units);
  }
  for (const LikelihoodEntry& e : likelihood_) {
    if (context.find(e.contains) == std::string_view::npos) continue;
    if (e.continuation && *e.continuation != continuation) continue;
    if (e.error) throw ScorerError(*e.error);
    return e.value;
  }
  if (default_loglikelihood) return *default_loglikelihood;
  throw ScorerError("mock table has no loglikelihood entry for this request");
}

std::string MockScorer::Generate(std::string_view context,
                                 std::span<const std::string> stop_sequences,
                                 int /*max_new_tokens*/) {
  if (mode_ == Mode::kTable) {
    for (const GenerateEntry& e : generate_) {
      if (context.find(e.contains) == std::string_view::npos) continue;
      if (e.error) throw ScorerError(*e.error);
      return TruncateAtStop(e.output, stop_sequences);
    }
  }
  if (default_output) return TruncateAtStop(*default_output, stop_sequences);
  if (mode_ == Mode::kUnigram) return "";
  throw ScorerError("mock table has no generate entry for this request");
}

}  // namespace kotoba::eval
