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

#ifndef KOTOBA_TOKENIZER_CPT_H_
#define KOTOBA_TOKENIZER_CPT_H_

#include <cstdint>
#include <span>
#include <string>

#include "kotoba/tokenizer/tokenizer.h"

namespace kotoba::tokenizer {

// Character-per-token rate: scalar values per emitted token.
struct CptReport {
  uint64_t char_count = 0;
  uint64_t token_count = 0;
  double rate = 0.0;

  bool operator==(const CptReport&) const = default;
};

// Normalizes each text with the tokenizer's normalization, then sums scalar
// values and Encode() lengths over the corpus. Throws InvalidArgumentError
// if the corpus has no non-empty text.
CptReport CharPerTokenRate(const Tokenizer& tokenizer,
                           std::span<const std::string> corpus,
                           int workers = 1);

// Token count of one text under the same normalization rule.
uint64_t CountTokens(const Tokenizer& tokenizer, std::string_view text);

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_CPT_H_
