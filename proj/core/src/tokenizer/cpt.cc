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

#include "kotoba/tokenizer/cpt.h"

#include <vector>

#include "kotoba/errors.h"
#include "kotoba/parallel.h"
#include "kotoba/unicode.h"

namespace kotoba::tokenizer {

uint64_t CountTokens(const Tokenizer& tokenizer, std::string_view text) {
  return tokenizer.Encode(tokenizer.Normalize(text)).ids.size();
}

CptReport CharPerTokenRate(const Tokenizer& tokenizer,
                           std::span<const std::string> corpus, int workers) {
  std::vector<uint64_t> chars(corpus.size());
  std::vector<uint64_t> tokens(corpus.size());
  ParallelFor(corpus.size(), workers, [&](size_t i) {
    const std::string text = tokenizer.Normalize(corpus[i]);
    chars[i] = unicode::CountScalars(text);
    tokens[i] = tokenizer.Encode(text).ids.size();
  });

  CptReport report;
  for (size_t i = 0; i < corpus.size(); ++i) {
    report.char_count += chars[i];
    report.token_count += tokens[i];
  }
  if (report.char_count == 0) {
    throw InvalidArgumentError(
        "character-per-token rate needs at least one non-empty text");
  }
  report.rate = static_cast<double>(report.char_count) /
                static_cast<double>(report.token_count);
  return report;
}

}  // namespace kotoba::tokenizer
