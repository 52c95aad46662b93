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

#include "kotoba/tokenizer/trainer.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "kotoba/errors.h"
#include "kotoba/parallel.h"
#include "kotoba/tokenizer/pretokenize.h"
#include "kotoba/unicode.h"

namespace kotoba::tokenizer {
namespace {

using SymbolId = int32_t;

uint64_t PairKey(SymbolId left, SymbolId right) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(left)) << 32) |
         static_cast<uint32_t>(right);
}
SymbolId PairLeft(uint64_t key) { return static_cast<SymbolId>(key >> 32); }
SymbolId PairRight(uint64_t key) {
  return static_cast<SymbolId>(key & 0xFFFFFFFFu);
}

bool HasNonEmptyText(std::span<const std::string> corpus) {
  return std::any_of(corpus.begin(), corpus.end(),
                     [](const std::string& s) { return !s.empty(); });
}

// Segment -> occurrence count, merged over shards in shard order.
std::map<std::string, int64_t> CountSegments(
    std::span<const std::string> corpus, const TrainOptions& options) {
  const size_t shards =
      std::max<size_t>(1, std::min<size_t>(corpus.size(), options.workers));
  std::vector<std::map<std::string, int64_t>> partial(shards);
  ParallelFor(shards, options.workers, [&](size_t shard) {
    const size_t begin = corpus.size() * shard / shards;
    const size_t end = corpus.size() * (shard + 1) / shards;
    auto& counts = partial[shard];
    for (size_t i = begin; i < end; ++i) {
      const std::string text =
          ApplyNormalization(options.normalization, corpus[i]);
      for (const MarkerChunk& chunk :
           SplitAtMarkers(text, options.special_markers)) {
        if (chunk.marker >= 0) continue;
        const std::string_view plain(text.data() + chunk.span.begin,
                                     chunk.span.end - chunk.span.begin);
        for (const Span& seg : SplitSegments(plain)) {
          ++counts[std::string(plain.substr(seg.begin, seg.end - seg.begin))];
        }
      }
    }
  });
  std::map<std::string, int64_t> merged = std::move(partial[0]);
  for (size_t s = 1; s < shards; ++s) {
    for (auto& [segment, count] : partial[s]) merged[segment] += count;
  }
  return merged;
}

}  // namespace

struct MergeTrainer::State {
  struct HeapItem {
    int64_t count;
    uint64_t key;
  };

  TrainOptions options;
  std::unordered_set<std::string> reserved;

  std::vector<std::string> pieces;
  std::vector<int> piece_chars;
  std::unordered_map<std::string, SymbolId, StringHash, std::equal_to<>>
      piece_index;
  std::vector<std::string> alphabet;

  std::vector<std::vector<SymbolId>> words;
  std::vector<int64_t> freqs;
  std::vector<uint64_t> word_stamp;
  uint64_t stamp = 0;

  std::unordered_map<uint64_t, int64_t> counts;
  std::unordered_map<uint64_t, std::vector<int32_t>> where;
  std::unordered_map<uint64_t, bool> eligible;

  // Max-heap by count; among equal counts the lexicographically smallest
  // (left, right) piece pair comes out first. Stale entries are skipped.
  std::function<bool(const HeapItem&, const HeapItem&)> less =
      [this](const HeapItem& a, const HeapItem& b) {
        if (a.count != b.count) return a.count < b.count;
        const std::string& al = pieces[PairLeft(a.key)];
        const std::string& bl = pieces[PairLeft(b.key)];
        if (al != bl) return al > bl;
        return pieces[PairRight(a.key)] > pieces[PairRight(b.key)];
      };
  std::priority_queue<HeapItem, std::vector<HeapItem>, decltype(less)> heap{
      less};

  int32_t next_rank = 0;

  SymbolId Intern(std::string piece, int chars) {
    const auto it = piece_index.find(piece);
    if (it != piece_index.end()) return it->second;
    const auto id = static_cast<SymbolId>(pieces.size());
    piece_index.emplace(piece, id);
    pieces.push_back(std::move(piece));
    piece_chars.push_back(chars);
    return id;
  }

  bool IsEligible(uint64_t key) {
    const auto it = eligible.find(key);
    if (it != eligible.end()) return it->second;
    const SymbolId l = PairLeft(key);
    const SymbolId r = PairRight(key);
    bool ok = piece_chars[l] + piece_chars[r] <= options.max_piece_chars;
    if (ok) {
      const std::string merged = pieces[l] + pieces[r];
      ok = !IsBytePiece(merged) && !reserved.contains(merged);
    }
    eligible.emplace(key, ok);
    return ok;
  }

  void Push(uint64_t key) {
    const auto it = counts.find(key);
    if (it == counts.end() || it->second <= 0) return;
    if (!IsEligible(key)) return;
    heap.push({it->second, key});
  }
};

MergeTrainer::MergeTrainer(std::span<const std::string> corpus,
                           const TrainOptions& options)
    : state_(std::make_unique<State>()) {
  if (options.max_piece_chars < 1) {
    throw InvalidArgumentError("max_piece_chars must be at least 1");
  }
  State& st = *state_;
  st.options = options;
  st.reserved.insert(options.special_markers.begin(),
                     options.special_markers.end());

  const std::map<std::string, int64_t> segments =
      CountSegments(corpus, options);

  std::vector<int64_t> char_freq;
  st.words.reserve(segments.size());
  st.freqs.reserve(segments.size());
  for (const auto& [segment, count] : segments) {
    std::vector<SymbolId> symbols;
    for (const unicode::Scalar& s : unicode::DecodeScalars(segment)) {
      const SymbolId id =
          st.Intern(segment.substr(s.offset, s.length), /*chars=*/1);
      if (static_cast<size_t>(id) >= char_freq.size()) char_freq.push_back(0);
      char_freq[id] += count;
      symbols.push_back(id);
    }
    st.words.push_back(std::move(symbols));
    st.freqs.push_back(count);
  }
  st.word_stamp.assign(st.words.size(), 0);

  std::vector<SymbolId> by_freq(st.pieces.size());
  for (size_t i = 0; i < by_freq.size(); ++i) by_freq[i] = static_cast<SymbolId>(i);
  std::sort(by_freq.begin(), by_freq.end(), [&](SymbolId a, SymbolId b) {
    if (char_freq[a] != char_freq[b]) return char_freq[a] > char_freq[b];
    // UTF-8 byte order equals code point order.
    return st.pieces[a] < st.pieces[b];
  });
  for (SymbolId id : by_freq) st.alphabet.push_back(st.pieces[id]);

  for (size_t w = 0; w < st.words.size(); ++w) {
    const auto& syms = st.words[w];
    for (size_t i = 0; i + 1 < syms.size(); ++i) {
      const uint64_t key = PairKey(syms[i], syms[i + 1]);
      st.counts[key] += st.freqs[w];
      st.where[key].push_back(static_cast<int32_t>(w));
    }
  }
  for (const auto& [key, count] : st.counts) st.Push(key);
}

MergeTrainer::~MergeTrainer() = default;
MergeTrainer::MergeTrainer(MergeTrainer&&) noexcept = default;
MergeTrainer& MergeTrainer::operator=(MergeTrainer&&) noexcept = default;

const std::vector<std::string>& MergeTrainer::alphabet() const {
  return state_->alphabet;
}

std::optional<MergeRule> MergeTrainer::NextMerge() {
  State& st = *state_;
  while (!st.heap.empty()) {
    const State::HeapItem top = st.heap.top();
    st.heap.pop();
    const auto it = st.counts.find(top.key);
    if (it == st.counts.end() || it->second != top.count || top.count <= 0) {
      continue;
    }

    const SymbolId left = PairLeft(top.key);
    const SymbolId right = PairRight(top.key);
    const SymbolId merged = st.Intern(st.pieces[left] + st.pieces[right],
                                      st.piece_chars[left] +
                                          st.piece_chars[right]);
    // A merged piece is strictly longer than either operand, so the pair
    // itself can never be re-created.
    const std::vector<int32_t> affected = std::move(st.where[top.key]);
    st.where.erase(top.key);
    ++st.stamp;

    std::unordered_set<uint64_t> changed;
    for (const int32_t w : affected) {
      if (st.word_stamp[w] == st.stamp) continue;
      st.word_stamp[w] = st.stamp;
      std::vector<SymbolId>& syms = st.words[w];
      const int64_t freq = st.freqs[w];

      bool present = false;
      for (size_t i = 0; i + 1 < syms.size() && !present; ++i) {
        present = syms[i] == left && syms[i + 1] == right;
      }
      if (!present) continue;

      for (size_t i = 0; i + 1 < syms.size(); ++i) {
        const uint64_t key = PairKey(syms[i], syms[i + 1]);
        st.counts[key] -= freq;
        changed.insert(key);
      }
      std::vector<SymbolId> next;
      next.reserve(syms.size());
      for (size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == left && syms[i + 1] == right) {
          next.push_back(merged);
          ++i;
        } else {
          next.push_back(syms[i]);
        }
      }
      syms = std::move(next);
      for (size_t i = 0; i + 1 < syms.size(); ++i) {
        const uint64_t key = PairKey(syms[i], syms[i + 1]);
        st.counts[key] += freq;
        st.where[key].push_back(w);
        changed.insert(key);
      }
    }
    for (const uint64_t key : changed) {
      if (st.counts[key] <= 0) {
        st.counts.erase(key);
        continue;
      }
      st.Push(key);
    }

    return MergeRule{st.pieces[left], st.pieces[right], st.pieces[merged],
                     st.next_rank++};
  }
  return std::nullopt;
}

TrainResult TrainMerges(std::span<const std::string> corpus, int num_merges,
                        const TrainOptions& options) {
  if (num_merges < 0) {
    throw InvalidArgumentError("num_merges must be non-negative");
  }
  if (num_merges > 0 && !HasNonEmptyText(corpus)) {
    throw InvalidArgumentError("cannot train merges on an empty corpus");
  }
  MergeTrainer trainer(corpus, options);

  TrainResult result;
  std::unordered_set<std::string> known;
  auto add_entry = [&](const std::string& piece) {
    if (!known.insert(piece).second) return;
    const auto id = static_cast<TokenId>(kFirstLearnedId + result.entries.size());
    result.entries.push_back({piece, id, id, TokenKind::kBase});
  };
  for (const std::string& ch : trainer.alphabet()) add_entry(ch);

  std::vector<MergeRule> rules;
  while (static_cast<int>(rules.size()) < num_merges) {
    std::optional<MergeRule> rule = trainer.NextMerge();
    if (!rule) break;
    add_entry(rule->result);
    rules.push_back(std::move(*rule));
  }
  result.merges = MergeTable::Create(std::move(rules));
  return result;
}

Tokenizer BuildTokenizer(const TrainResult& result,
                         Normalization normalization) {
  const Vocabulary bytes = Vocabulary::ByteFallbackOnly();
  std::vector<TokenEntry> entries(bytes.entries().begin(),
                                  bytes.entries().end());
  entries.insert(entries.end(), result.entries.begin(), result.entries.end());
  return Tokenizer::Create(Vocabulary::Create(std::move(entries)),
                           result.merges, normalization);
}

}  // namespace kotoba::tokenizer
