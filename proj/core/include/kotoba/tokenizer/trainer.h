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

// Byte-pair merge training over scalar values.
//
// The corpus is normalized, split at special markers and pre-tokenized into
// segments exactly as Encode does. Every iteration counts all adjacent
// symbol pairs (overlapping occurrences included, weighted by segment
// frequency), picks the most frequent eligible pair, and merges its
// occurrences left to right without overlap. Ties go to the pair whose
// (left, right) pieces are lexicographically smallest by code point.
//
// A pair is eligible when the merged piece has at most `max_piece_chars`
// scalar values and is not a reserved surface (a special marker or the
// "<0xNN>" byte form). Training stops when no eligible pair remains.

#ifndef KOTOBA_TOKENIZER_TRAINER_H_
#define KOTOBA_TOKENIZER_TRAINER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kotoba/tokenizer/tokenizer.h"
#include "kotoba/tokenizer/vocabulary.h"

namespace kotoba::tokenizer {

struct TrainOptions {
  Normalization normalization = Normalization::kNfkc;
  int max_piece_chars = 16;
  // Threads for corpus preprocessing; results do not depend on it.
  int workers = 1;
  // Matched atomically in the corpus and never learned as pieces.
  std::vector<std::string> special_markers = {
      std::string(kSpecialPieces[0]), std::string(kSpecialPieces[1]),
      std::string(kSpecialPieces[2])};
};

// Incremental trainer. Construction preprocesses the corpus; each call to
// NextMerge() learns one rule.
class MergeTrainer {
 public:
  MergeTrainer(std::span<const std::string> corpus, const TrainOptions& options);
  ~MergeTrainer();
  MergeTrainer(MergeTrainer&&) noexcept;
  MergeTrainer& operator=(MergeTrainer&&) noexcept;

  // Distinct scalar values of the corpus as pieces, most frequent first
  // (ties by code point).
  const std::vector<std::string>& alphabet() const;

  // The next rule in learned order (ranks 0, 1, ...), or nullopt once no
  // eligible pair is left.
  std::optional<MergeRule> NextMerge();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

struct TrainResult {
  // Alphabet pieces followed by each newly created merge result, with ids
  // starting at kFirstLearnedId.
  std::vector<TokenEntry> entries;
  MergeTable merges;
};

// Learns min(num_merges, available) rules. Throws InvalidArgumentError for
// a negative budget, or for an empty corpus when num_merges > 0.
TrainResult TrainMerges(std::span<const std::string> corpus, int num_merges,
                        const TrainOptions& options = {});

// Specials + bytes + the learned entries, all of kind base.
Tokenizer BuildTokenizer(const TrainResult& result,
                         Normalization normalization);

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_TRAINER_H_
