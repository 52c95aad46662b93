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

#ifndef KOTOBA_TOKENIZER_EXTEND_H_
#define KOTOBA_TOKENIZER_EXTEND_H_

#include <span>
#include <string>

#include "kotoba/tokenizer/tokenizer.h"

namespace kotoba::tokenizer {

struct ExtendOptions {
  int max_piece_chars = 16;
  int workers = 1;
};

// Grafts up to `budget` new pieces learned from `corpus` onto a frozen base.
//
// Candidates come from a merge trainer run on the corpus (normalized with
// the base's normalization): first the corpus alphabet, most frequent first,
// then each merge result in learned order. Candidates already present in
// the base are skipped and cost nothing. Every base entry keeps its id and
// rank; new entries are kind=extension with ids base_total, base_total+1, ...
// Learned rules are appended after the base rules whenever their result is
// new, or when the base has the result piece but no rule for that pair.
//
// Adds exactly min(budget, available) pieces. budget == 0 returns the base
// unchanged. Throws InvalidArgumentError for a negative budget or an empty
// corpus with budget > 0.
Tokenizer ExtendVocabulary(const Tokenizer& base,
                           std::span<const std::string> corpus, int budget,
                           const ExtendOptions& options = {});

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_EXTEND_H_
