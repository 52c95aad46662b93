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

// Byte-fallback subword tokenizer.
//
// Encoding works segment by segment (see pretokenize.h). Each scalar value
// becomes its vocabulary piece when one exists and otherwise its UTF-8 bytes
// as byte tokens, so every valid input is encodable. Merge rules are then
// applied greedily: the lowest-ranked adjacent pair is merged first, with
// ties going to the leftmost position, until no rule applies.
//
// Encode never normalizes its input; offsets always refer to the bytes the
// caller passed. `Normalize()` applies the tokenizer's configured
// normalization for callers (trainer, CPT measurement, pipeline) that want
// to see the same text distribution the vocabulary was learned on.
//
// A constructed Tokenizer is immutable and safe to share across threads.

#ifndef KOTOBA_TOKENIZER_TOKENIZER_H_
#define KOTOBA_TOKENIZER_TOKENIZER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kotoba/tokenizer/pretokenize.h"
#include "kotoba/tokenizer/vocabulary.h"

namespace kotoba::tokenizer {

enum class Normalization { kNone, kNfkc };

std::string_view NormalizationName(Normalization n);
// Throws FormatError for unknown names.
Normalization ParseNormalization(std::string_view name);
std::string ApplyNormalization(Normalization n, std::string_view text);

struct Encoding {
  std::vector<TokenId> ids;
  // Byte ranges into the UTF-8 input, one per id; they partition the input.
  std::vector<Span> offsets;

  bool operator==(const Encoding&) const = default;
};

class Tokenizer {
 public:
  // Throws FormatError unless every merge operand and result resolves to a
  // learned (base or extension) piece.
  static Tokenizer Create(Vocabulary vocabulary, MergeTable merges,
                          Normalization normalization);

  // Specials and byte tokens only.
  static Tokenizer ByteFallback(Normalization normalization);

  // Total on valid UTF-8; throws InvalidArgumentError otherwise.
  Encoding Encode(std::string_view text) const;

  // Throws UnknownIdError for ids outside [0, total_size) and DecodeError if
  // a run of byte tokens does not form well-formed UTF-8.
  std::string Decode(std::span<const TokenId> ids) const;

  std::string Normalize(std::string_view text) const {
    return ApplyNormalization(normalization_, text);
  }

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const MergeTable& merges() const { return merges_; }
  Normalization normalization() const { return normalization_; }
  // Surfaces that Encode matches atomically: the special-kind pieces.
  std::span<const std::string> special_markers() const {
    return special_markers_;
  }

  bool operator==(const Tokenizer& other) const {
    return normalization_ == other.normalization_ &&
           vocabulary_ == other.vocabulary_ && merges_ == other.merges_;
  }

 private:
  struct PairMerge {
    int32_t rank;
    TokenId result;
  };

  Tokenizer(Vocabulary vocabulary, MergeTable merges,
            Normalization normalization);

  static uint64_t PairKey(TokenId left, TokenId right) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(left)) << 32) |
           static_cast<uint32_t>(right);
  }

  void EncodeSegment(std::string_view text, Span segment,
                     Encoding* out) const;

  Vocabulary vocabulary_;
  MergeTable merges_;
  Normalization normalization_;
  std::vector<std::string> special_markers_;
  std::unordered_map<uint64_t, PairMerge> pair_merges_;
};

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_TOKENIZER_H_
