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

#include "kotoba/eval/metrics.h"

#include <algorithm>
#include <map>
#include <utility>

#include "kotoba/unicode.h"

namespace kotoba::eval {
namespace {

bool IsEmoji(char32_t c) {
  return (c >= 0x1F300 && c <= 0x1FAFF) || (c >= 0x2600 && c <= 0x27BF);
}

using Bigram = std::pair<std::string, std::string>;

std::map<Bigram, int> CountBigrams(const std::vector<std::string>& units) {
  std::map<Bigram, int> counts;
  for (size_t i = 0; i + 1 < units.size(); ++i) {
    ++counts[{units[i], units[i + 1]}];
  }
  return counts;
}

}  // namespace

std::string NormalizeAnswer(std::string_view text) {
  const std::u32string folded =
      unicode::DecodeUtf8(unicode::NormalizeNfkc(text));
  std::u32string kept;
  for (const char32_t c : folded) {
    if (unicode::IsPunctuation(c) || unicode::IsSymbol(c) || IsEmoji(c)) {
      continue;
    }
    // Lowercasing before recomposition: T+U+0308 has no composed form but
    // t+U+0308 does.
    kept.push_back(unicode::ToLowerLatin(c));
  }
  const std::u32string recomposed =
      unicode::DecodeUtf8(unicode::NormalizeNfkc(unicode::EncodeUtf8(kept)));
  std::u32string out;
  bool pending_space = false;
  for (const char32_t c : recomposed) {
    if (unicode::IsWhitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return unicode::EncodeUtf8(out);
}

bool ExactMatch(std::string_view prediction,
                std::span<const std::string> references) {
  const std::string normalized = NormalizeAnswer(prediction);
  return std::any_of(references.begin(), references.end(),
                     [&normalized](const std::string& r) {
                       return NormalizeAnswer(r) == normalized;
                     });
}

std::vector<std::string> SegmentUnits(std::string_view text,
                                      Segmenter segmenter) {
  std::vector<std::string> units;
  std::string current;
  for (const unicode::Scalar& s : unicode::DecodeScalars(text)) {
    const std::string_view bytes = text.substr(s.offset, s.length);
    if (unicode::IsWhitespace(s.code_point)) {
      if (!current.empty()) units.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (segmenter == Segmenter::kChar) {
      units.emplace_back(bytes);
    } else {
      current.append(bytes);
    }
  }
  if (!current.empty()) units.push_back(std::move(current));
  return units;
}

double Rouge2(std::string_view hypothesis, std::string_view reference,
              Segmenter segmenter) {
  const std::vector<std::string> hyp = SegmentUnits(hypothesis, segmenter);
  const std::vector<std::string> ref = SegmentUnits(reference, segmenter);
  if (hyp.size() < 2 || ref.size() < 2) return 0.0;
  const std::map<Bigram, int> hyp_counts = CountBigrams(hyp);
  const std::map<Bigram, int> ref_counts = CountBigrams(ref);
  int overlap = 0;
  for (const auto& [bigram, count] : hyp_counts) {
    const auto it = ref_counts.find(bigram);
    if (it != ref_counts.end()) overlap += std::min(count, it->second);
  }
  // 2PR / (P + R) with P = o/|hyp bigrams| and R = o/|ref bigrams|
  // simplifies to 2o / (|hyp bigrams| + |ref bigrams|).
  return 2.0 * overlap / static_cast<double>(hyp.size() - 1 + ref.size() - 1);
}

}  // namespace kotoba::eval
