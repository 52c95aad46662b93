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

#ifndef KOTOBA_TOKENIZER_VOCABULARY_H_
#define KOTOBA_TOKENIZER_VOCABULARY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kotoba::tokenizer {

// Transparent hash so maps keyed by std::string accept string_view lookups.
struct StringHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

using TokenId = int32_t;

enum class TokenKind { kSpecial, kByte, kBase, kExtension };

std::string_view TokenKindName(TokenKind kind);
// Throws FormatError for unknown names.
TokenKind ParseTokenKind(std::string_view name);

// Fixed id layout: three reserved markers, then the 256 byte tokens.
inline constexpr TokenId kPadId = 0;
inline constexpr TokenId kBosId = 1;
inline constexpr TokenId kEosId = 2;
inline constexpr TokenId kFirstByteId = 3;
inline constexpr TokenId kNumSpecial = 3;
inline constexpr TokenId kFirstLearnedId = kFirstByteId + 256;

inline constexpr std::string_view kSpecialPieces[kNumSpecial] = {
    "<pad>", "<s>", "</s>"};

// "<0xNN>" with uppercase hex.
std::string BytePiece(uint8_t byte);
// True iff `piece` has the exact byte-token surface form.
bool IsBytePiece(std::string_view piece);

struct TokenEntry {
  std::string piece;
  TokenId id = 0;
  // Lower ranks were learned earlier. Entries use rank == id.
  int32_t rank = 0;
  TokenKind kind = TokenKind::kBase;

  bool operator==(const TokenEntry&) const = default;
};

// Dense, immutable piece inventory.
class Vocabulary {
 public:
  // Validates every structural invariant (dense ids, unique pieces, the
  // fixed special/byte layout, extensions after base) and throws
  // FormatError describing the first violation.
  static Vocabulary Create(std::vector<TokenEntry> entries);

  // Specials plus the 256 byte tokens and nothing else.
  static Vocabulary ByteFallbackOnly();

  const TokenEntry& entry(TokenId id) const { return entries_[id]; }
  std::span<const TokenEntry> entries() const { return entries_; }
  std::optional<TokenId> Find(std::string_view piece) const;
  bool Contains(std::string_view piece) const { return Find(piece).has_value(); }

  TokenId total_size() const { return static_cast<TokenId>(entries_.size()); }
  TokenId base_size() const { return base_size_; }
  static TokenId ByteId(uint8_t byte) { return kFirstByteId + byte; }

  bool operator==(const Vocabulary& other) const {
    return entries_ == other.entries_;
  }

 private:
  Vocabulary() = default;

  std::vector<TokenEntry> entries_;
  std::unordered_map<std::string, TokenId, StringHash, std::equal_to<>> index_;
  TokenId base_size_ = 0;
};

struct MergeRule {
  std::string left;
  std::string right;
  std::string result;
  int32_t rank = 0;

  bool operator==(const MergeRule&) const = default;
};

// Ordered merge rules. Ranks are unique and strictly increasing.
class MergeTable {
 public:
  MergeTable() = default;
  // Throws FormatError if a result is not left+right or ranks are not
  // strictly increasing.
  static MergeTable Create(std::vector<MergeRule> rules);

  std::span<const MergeRule> rules() const { return rules_; }
  size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  int32_t next_rank() const { return rules_.empty() ? 0 : rules_.back().rank + 1; }

  bool operator==(const MergeTable&) const = default;

 private:
  std::vector<MergeRule> rules_;
};

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_VOCABULARY_H_
