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

// Slow, obviously-correct reference implementations used as test oracles.
// Nothing here shares code with the library beyond UTF-8 decoding and the
// Unicode property tables.

#ifndef KOTOBA_TESTS_ORACLES_ORACLES_H_
#define KOTOBA_TESTS_ORACLES_ORACLES_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kotoba::oracle {

struct Rule {
  std::u32string left;
  std::u32string right;

  bool operator==(const Rule&) const = default;
};

struct BpeResult {
  std::vector<std::u32string> alphabet;  // most frequent first
  std::vector<Rule> rules;               // in learned order
};

// Recounts every adjacent pair from scratch on each iteration. No
// normalization and no special markers: callers pass plain text.
BpeResult TrainBpe(const std::vector<std::string>& corpus, int num_merges,
                   size_t max_piece_chars);

// Whitespace-prefix pre-tokenization, written independently of the library.
std::vector<std::u32string> Segments(std::u32string_view text);

// Greedy encoding: repeatedly merge the adjacent pair with the lowest rank,
// leftmost first. Scalars missing from `pieces` become byte pieces
// "<0xNN>". Returns piece strings, not ids.
std::vector<std::string> EncodePieces(
    std::string_view text, const std::map<std::string, int>& piece_ids,
    const std::map<std::pair<std::string, std::string>, int>& rule_ranks);

// Exact Jaccard similarity of the sets of `n`-scalar shingles.
double ExactJaccard(std::string_view a, std::string_view b, size_t n);

}  // namespace kotoba::oracle

#endif  // KOTOBA_TESTS_ORACLES_ORACLES_H_
