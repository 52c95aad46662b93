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

#include "kotoba/tokenizer/extend.h"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kotoba/errors.h"
#include "kotoba/tokenizer/trainer.h"

namespace kotoba::tokenizer {

Tokenizer ExtendVocabulary(const Tokenizer& base,
                           std::span<const std::string> corpus, int budget,
                           const ExtendOptions& options) {
  if (budget < 0) throw InvalidArgumentError("budget must be non-negative");
  if (budget == 0) return base;
  if (std::none_of(corpus.begin(), corpus.end(),
                   [](const std::string& s) { return !s.empty(); })) {
    throw InvalidArgumentError("cannot extend a vocabulary from an empty corpus");
  }

  TrainOptions train;
  train.normalization = base.normalization();
  train.max_piece_chars = options.max_piece_chars;
  train.workers = options.workers;
  train.special_markers.assign(base.special_markers().begin(),
                               base.special_markers().end());
  MergeTrainer trainer(corpus, train);

  const Vocabulary& vocab = base.vocabulary();
  std::vector<TokenEntry> entries(vocab.entries().begin(),
                                  vocab.entries().end());
  std::vector<MergeRule> rules(base.merges().rules().begin(),
                               base.merges().rules().end());
  std::set<std::pair<std::string, std::string>> rule_pairs;
  for (const MergeRule& r : rules) rule_pairs.emplace(r.left, r.right);
  std::unordered_set<std::string> added_pieces;
  int32_t next_rank = base.merges().next_rank();
  int added = 0;

  auto known = [&](const std::string& piece) {
    return vocab.Contains(piece) || added_pieces.contains(piece);
  };
  auto add_piece = [&](const std::string& piece) {
    const auto id = static_cast<TokenId>(entries.size());
    entries.push_back({piece, id, id, TokenKind::kExtension});
    added_pieces.insert(piece);
    ++added;
  };

  for (const std::string& ch : trainer.alphabet()) {
    if (added == budget) break;
    if (!known(ch)) add_piece(ch);
  }
  while (added < budget) {
    std::optional<MergeRule> rule = trainer.NextMerge();
    if (!rule) break;
    const bool novel = !known(rule->result);
    if (!novel && rule_pairs.contains({rule->left, rule->right})) continue;
    if (novel) add_piece(rule->result);
    rule_pairs.emplace(rule->left, rule->right);
    rule->rank = next_rank++;
    rules.push_back(std::move(*rule));
  }

  return Tokenizer::Create(Vocabulary::Create(std::move(entries)),
                           MergeTable::Create(std::move(rules)),
                           base.normalization());
}

}  // namespace kotoba::tokenizer
