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

#include "kotoba/tokenizer/tokenizer.h"

#include <algorithm>
#include <queue>
#include <utility>

#include "kotoba/errors.h"
#include "kotoba/unicode.h"

namespace kotoba::tokenizer {

std::string_view NormalizationName(Normalization n) {
  return n == Normalization::kNfkc ? "nfkc" : "none";
}

Normalization ParseNormalization(std::string_view name) {
  if (name == "nfkc") return Normalization::kNfkc;
  if (name == "none") return Normalization::kNone;
  throw FormatError("unknown normalization '" + std::string(name) +
                    "' (expected nfkc or none)");
}

std::string ApplyNormalization(Normalization n, std::string_view text) {
  if (n == Normalization::kNfkc) return unicode::NormalizeNfkc(text);
  return std::string(text);
}

Tokenizer::Tokenizer(Vocabulary vocabulary, MergeTable merges,
                     Normalization normalization)
    : vocabulary_(std::move(vocabulary)),
      merges_(std::move(merges)),
      normalization_(normalization) {}

Tokenizer Tokenizer::Create(Vocabulary vocabulary, MergeTable merges,
                            Normalization normalization) {
  Tokenizer tok(std::move(vocabulary), std::move(merges), normalization);

  auto learned_id = [&tok](const std::string& piece, size_t rule) {
    const auto id = tok.vocabulary_.Find(piece);
    if (!id) {
      throw FormatError("merge rule " + std::to_string(rule) +
                        " references unknown piece");
    }
    const TokenKind kind = tok.vocabulary_.entry(*id).kind;
    if (kind == TokenKind::kSpecial || kind == TokenKind::kByte) {
      throw FormatError("merge rule " + std::to_string(rule) +
                        " references a special or byte piece");
    }
    return *id;
  };

  const auto rules = tok.merges_.rules();
  tok.pair_merges_.reserve(rules.size());
  for (size_t i = 0; i < rules.size(); ++i) {
    const TokenId left = learned_id(rules[i].left, i);
    const TokenId right = learned_id(rules[i].right, i);
    const TokenId result = learned_id(rules[i].result, i);
    // The earliest rule for a pair wins; later duplicates never fire.
    tok.pair_merges_.try_emplace(PairKey(left, right),
                                 PairMerge{rules[i].rank, result});
  }

  for (const TokenEntry& e : tok.vocabulary_.entries()) {
    if (e.kind == TokenKind::kSpecial) tok.special_markers_.push_back(e.piece);
  }
  return tok;
}

Tokenizer Tokenizer::ByteFallback(Normalization normalization) {
  return Create(Vocabulary::ByteFallbackOnly(), MergeTable(), normalization);
}

Encoding Tokenizer::Encode(std::string_view text) const {
  if (!unicode::IsValidUtf8(text)) {
    throw InvalidArgumentError("Encode requires valid UTF-8 input");
  }
  Encoding out;
  out.ids.reserve(text.size());
  out.offsets.reserve(text.size());
  for (const MarkerChunk& chunk : SplitAtMarkers(text, special_markers_)) {
    if (chunk.marker >= 0) {
      const auto id = vocabulary_.Find(special_markers_[chunk.marker]);
      out.ids.push_back(*id);
      out.offsets.push_back(chunk.span);
      continue;
    }
    const std::string_view plain =
        text.substr(chunk.span.begin, chunk.span.end - chunk.span.begin);
    for (const Span& seg : SplitSegments(plain)) {
      EncodeSegment(text,
                    {chunk.span.begin + seg.begin, chunk.span.begin + seg.end},
                    &out);
    }
  }
  return out;
}

void Tokenizer::EncodeSegment(std::string_view text, Span segment,
                              Encoding* out) const {
  struct Symbol {
    TokenId id;
    Span span;
    int prev;
    int next;
    bool alive;
  };
  std::vector<Symbol> symbols;
  const std::string_view seg_text =
      text.substr(segment.begin, segment.end - segment.begin);
  for (const unicode::Scalar& s : unicode::DecodeScalars(seg_text)) {
    const size_t begin = segment.begin + s.offset;
    const auto piece = vocabulary_.Find(seg_text.substr(s.offset, s.length));
    const bool learned =
        piece && (vocabulary_.entry(*piece).kind == TokenKind::kBase ||
                  vocabulary_.entry(*piece).kind == TokenKind::kExtension);
    if (learned) {
      symbols.push_back({*piece, {begin, begin + s.length}, 0, 0, true});
      continue;
    }
    for (size_t b = 0; b < s.length; ++b) {
      const auto byte = static_cast<uint8_t>(text[begin + b]);
      symbols.push_back(
          {Vocabulary::ByteId(byte), {begin + b, begin + b + 1}, 0, 0, true});
    }
  }
  const int n = static_cast<int>(symbols.size());
  for (int i = 0; i < n; ++i) {
    symbols[i].prev = i - 1;
    symbols[i].next = i + 1 < n ? i + 1 : -1;
  }

  if (!pair_merges_.empty() && n > 1) {
    struct Candidate {
      int32_t rank;
      int left;
      TokenId left_id;
      TokenId right_id;
      bool operator>(const Candidate& o) const {
        return rank != o.rank ? rank > o.rank : left > o.left;
      }
    };
    std::priority_queue<Candidate, std::vector<Candidate>,
                        std::greater<Candidate>>
        queue;
    auto push_pair = [&](int left) {
      if (left < 0) return;
      const int right = symbols[left].next;
      if (right < 0) return;
      const auto it =
          pair_merges_.find(PairKey(symbols[left].id, symbols[right].id));
      if (it == pair_merges_.end()) return;
      queue.push({it->second.rank, left, symbols[left].id, symbols[right].id});
    };
    for (int i = 0; i + 1 < n; ++i) push_pair(i);

    while (!queue.empty()) {
      const Candidate top = queue.top();
      queue.pop();
      Symbol& left = symbols[top.left];
      // Skip entries invalidated by an earlier merge.
      if (!left.alive || left.id != top.left_id || left.next < 0) continue;
      Symbol& right = symbols[left.next];
      if (right.id != top.right_id) continue;

      left.id = pair_merges_.at(PairKey(top.left_id, top.right_id)).result;
      left.span.end = right.span.end;
      right.alive = false;
      left.next = right.next;
      if (right.next >= 0) symbols[right.next].prev = top.left;
      push_pair(left.prev);
      push_pair(top.left);
    }
  }

  for (int i = 0; i >= 0 && i < n; i = symbols[i].next) {
    out->ids.push_back(symbols[i].id);
    out->offsets.push_back(symbols[i].span);
  }
}

std::string Tokenizer::Decode(std::span<const TokenId> ids) const {
  std::string out;
  std::string pending_bytes;
  auto flush = [&] {
    if (pending_bytes.empty()) return;
    if (!unicode::IsValidUtf8(pending_bytes)) {
      throw DecodeError("byte tokens do not form valid UTF-8");
    }
    out += pending_bytes;
    pending_bytes.clear();
  };
  for (const TokenId id : ids) {
    if (id < 0 || id >= vocabulary_.total_size()) throw UnknownIdError(id);
    const TokenEntry& e = vocabulary_.entry(id);
    if (e.kind == TokenKind::kByte) {
      pending_bytes.push_back(static_cast<char>(id - kFirstByteId));
      continue;
    }
    flush();
    out += e.piece;
  }
  flush();
  return out;
}

}  // namespace kotoba::tokenizer
