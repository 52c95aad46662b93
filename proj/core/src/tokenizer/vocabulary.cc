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

#include "kotoba/tokenizer/vocabulary.h"

#include <utility>

#include "kotoba/errors.h"
#include "kotoba/unicode.h"

namespace kotoba::tokenizer {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kSpecial:
      return "special";
    case TokenKind::kByte:
      return "byte";
    case TokenKind::kBase:
      return "base";
    case TokenKind::kExtension:
      return "extension";
  }
  return "base";
}

TokenKind ParseTokenKind(std::string_view name) {
  if (name == "special") return TokenKind::kSpecial;
  if (name == "byte") return TokenKind::kByte;
  if (name == "base") return TokenKind::kBase;
  if (name == "extension") return TokenKind::kExtension;
  throw FormatError("unknown token kind '" + std::string(name) + "'");
}

std::string BytePiece(uint8_t byte) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string piece = "<0x00>";
  piece[3] = kHex[byte >> 4];
  piece[4] = kHex[byte & 0xF];
  return piece;
}

bool IsBytePiece(std::string_view piece) {
  auto is_upper_hex = [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'F');
  };
  return piece.size() == 6 && piece.substr(0, 3) == "<0x" &&
         is_upper_hex(piece[3]) && is_upper_hex(piece[4]) && piece[5] == '>';
}

Vocabulary Vocabulary::Create(std::vector<TokenEntry> entries) {
  auto fail = [](TokenId id, const std::string& what) {
    throw FormatError("vocabulary entry " + std::to_string(id) + ": " + what);
  };
  if (entries.size() < static_cast<size_t>(kFirstLearnedId)) {
    throw FormatError("vocabulary must contain the 3 special and 256 byte "
                      "entries, found " + std::to_string(entries.size()));
  }

  Vocabulary vocab;
  vocab.index_.reserve(entries.size());
  bool seen_extension = false;
  for (size_t i = 0; i < entries.size(); ++i) {
    const TokenEntry& e = entries[i];
    const auto id = static_cast<TokenId>(i);
    if (e.id != id) fail(id, "ids must be dense and ordered, got id " +
                                 std::to_string(e.id));
    if (e.piece.empty()) fail(id, "empty piece");
    if (e.rank < 0) fail(id, "negative rank");
    if (!unicode::IsValidUtf8(e.piece)) fail(id, "piece is not valid UTF-8");

    const bool byte_surface = IsBytePiece(e.piece);
    if (byte_surface != (e.kind == TokenKind::kByte)) {
      fail(id, "byte surface form and kind=byte must coincide");
    }
    if (id < kNumSpecial) {
      if (e.kind != TokenKind::kSpecial || e.piece != kSpecialPieces[id]) {
        fail(id, "ids 0-2 are reserved for <pad>, <s>, </s>");
      }
    } else if (id < kFirstLearnedId) {
      if (e.piece != BytePiece(static_cast<uint8_t>(id - kFirstByteId))) {
        fail(id, "ids 3-258 must be the byte tokens <0x00>..<0xFF> in order");
      }
    } else if (e.kind == TokenKind::kSpecial || e.kind == TokenKind::kByte) {
      fail(id, "special and byte entries are limited to the reserved ids");
    }

    if (e.kind == TokenKind::kExtension) {
      seen_extension = true;
    } else if (seen_extension) {
      fail(id, "base entries must precede every extension entry");
    } else {
      ++vocab.base_size_;
    }
    if (!vocab.index_.emplace(e.piece, id).second) {
      fail(id, "duplicate piece");
    }
  }
  vocab.entries_ = std::move(entries);
  return vocab;
}

Vocabulary Vocabulary::ByteFallbackOnly() {
  std::vector<TokenEntry> entries;
  entries.reserve(kFirstLearnedId);
  for (TokenId id = 0; id < kNumSpecial; ++id) {
    entries.push_back({std::string(kSpecialPieces[id]), id, id,
                       TokenKind::kSpecial});
  }
  for (int b = 0; b < 256; ++b) {
    const TokenId id = kFirstByteId + b;
    entries.push_back(
        {BytePiece(static_cast<uint8_t>(b)), id, id, TokenKind::kByte});
  }
  return Create(std::move(entries));
}

std::optional<TokenId> Vocabulary::Find(std::string_view piece) const {
  const auto it = index_.find(piece);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MergeTable MergeTable::Create(std::vector<MergeRule> rules) {
  for (size_t i = 0; i < rules.size(); ++i) {
    const MergeRule& r = rules[i];
    const std::string where = "merge rule " + std::to_string(i);
    if (r.left.empty() || r.right.empty()) {
      throw FormatError(where + ": empty operand");
    }
    if (r.result != r.left + r.right) {
      throw FormatError(where + ": result must equal left + right");
    }
    if (r.rank < 0 || (i > 0 && r.rank <= rules[i - 1].rank)) {
      throw FormatError(where + ": ranks must be non-negative and strictly "
                                "increasing");
    }
  }
  MergeTable table;
  table.rules_ = std::move(rules);
  return table;
}

}  // namespace kotoba::tokenizer
