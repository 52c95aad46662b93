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

#include "kotoba/corpus/heuristics.h"

#include <cstdio>
#include <string>
#include <unordered_set>

#include "kotoba/errors.h"
#include "kotoba/unicode.h"

namespace kotoba::corpus {
namespace {

struct U32Hash {
  size_t operator()(std::u32string_view s) const {
    return std::hash<std::u32string_view>()(s);
  }
};

std::string FormatRatio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

void ValidateHeuristicParams(const HeuristicParams& params) {
  std::string problems;
  auto add = [&problems](const char* msg) {
    if (!problems.empty()) problems += "; ";
    problems += msg;
  };
  if (params.min_chars > params.max_chars) {
    add("min_chars must not exceed max_chars");
  }
  if (!(params.max_symbol_ratio >= 0.0 && params.max_symbol_ratio <= 1.0)) {
    add("max_symbol_ratio must be in [0, 1]");
  }
  if (!(params.max_repetition_ratio >= 0.0 &&
        params.max_repetition_ratio <= 1.0)) {
    add("max_repetition_ratio must be in [0, 1]");
  }
  if (!problems.empty()) throw ConfigError(problems);
}

TextStats ComputeTextStats(std::string_view text) {
  const std::u32string cps = unicode::DecodeUtf8(text);
  TextStats stats;
  stats.chars = cps.size();
  size_t symbols = 0;
  for (const char32_t c : cps) {
    if (unicode::IsWhitespace(c)) continue;
    ++stats.non_whitespace;
    const bool digit = unicode::IsDecimalDigit(c);
    stats.digits += digit;
    if (unicode::IsKana(c)) {
      ++stats.kana;
    } else if (unicode::IsHan(c)) {
      ++stats.han;
    }
    if (!digit && !unicode::IsLetter(c) && !unicode::IsPunctuation(c) &&
        !unicode::IsKana(c) && !unicode::IsHan(c)) {
      ++symbols;
    }
  }
  if (stats.non_whitespace > 0) {
    stats.symbol_ratio = static_cast<double>(symbols) /
                         static_cast<double>(stats.non_whitespace);
  }
  if (cps.size() >= 4) {
    const std::u32string_view view(cps);
    std::unordered_set<std::u32string_view, U32Hash> grams;
    const size_t total = cps.size() - 3;
    for (size_t i = 0; i < total; ++i) grams.insert(view.substr(i, 4));
    stats.repetition_ratio =
        1.0 - static_cast<double>(grams.size()) / static_cast<double>(total);
  }
  return stats;
}

StageOutcome ApplyHeuristics(const Document& doc,
                             const HeuristicParams& params) {
  const TextStats stats = ComputeTextStats(doc.text);
  StageOutcome outcome = Kept(doc, Stage::kHeuristics);
  outcome.detail["chars"] = std::to_string(stats.chars);
  outcome.detail["symbol_ratio"] = FormatRatio(stats.symbol_ratio);
  outcome.detail["repetition_ratio"] = FormatRatio(stats.repetition_ratio);
  const char* rule = nullptr;
  if (stats.chars < params.min_chars) {
    rule = "min length";
  } else if (stats.chars > params.max_chars) {
    rule = "max length";
  } else if (stats.symbol_ratio > params.max_symbol_ratio) {
    rule = "symbol ratio";
  } else if (stats.repetition_ratio > params.max_repetition_ratio) {
    rule = "repetition";
  }
  if (rule != nullptr) {
    outcome.verdict = Verdict::kDropped;
    outcome.reason = rule;
    outcome.detail["rule"] = rule;
  }
  return outcome;
}

}  // namespace kotoba::corpus
