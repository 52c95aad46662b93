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

// Exact and near-duplicate removal. Both keep the earliest document in
// stream order and commit decisions sequentially, so the result does not
// depend on how many workers computed the hashes.

#ifndef KOTOBA_CORPUS_DEDUP_H_
#define KOTOBA_CORPUS_DEDUP_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kotoba/corpus/document.h"
#include "kotoba/corpus/minhash.h"

namespace kotoba::corpus {

// BLAKE2b with a 128-bit digest.
using ContentHash = std::array<uint8_t, 16>;
ContentHash HashContent(std::string_view text);
std::string ContentHashHex(const ContentHash& hash);

struct DedupResult {
  std::vector<Document> kept;
  // One outcome per input document, in input order.
  std::vector<StageOutcome> outcomes;
};

// Drops every document whose text hash equals that of an earlier one.
// Dropped outcomes name the survivor in `reason` and detail["duplicate_of"].
DedupResult DedupExact(std::vector<Document> docs, int workers = 1);

// Bands the signatures (rows_per_band rows each); documents sharing a band
// bucket whose estimated Jaccard is >= jaccard_threshold are joined with
// union-find, and only the earliest member of each cluster survives.
// Documents shorter than one shingle are kept with reason
// "below shingle length".
DedupResult DedupNear(std::vector<Document> docs, const MinHashParams& params,
                      int workers = 1);

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_DEDUP_H_
