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

#include "kotoba/corpus/dedup.h"

#include <sodium.h>

#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "kotoba/parallel.h"

namespace kotoba::corpus {
namespace {

struct ArrayHash {
  size_t operator()(const ContentHash& h) const {
    size_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | h[i];
    return v;
  }
};

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root wins, so a cluster's root is its earliest member.
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<size_t> parent_;
};

uint64_t BandKey(const MinHashSignature& sig, int band, int rows) {
  // FNV-1a over the band's rows. Collisions only add candidates; the
  // Jaccard estimate still decides.
  uint64_t h = 1469598103934665603ull;
  for (int r = 0; r < rows; ++r) {
    uint64_t v = sig[band * rows + r];
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string FormatSimilarity(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

ContentHash HashContent(std::string_view text) {
  if (sodium_init() < 0) throw Error("libsodium failed to initialize");
  ContentHash out;
  crypto_generichash(out.data(), out.size(),
                     reinterpret_cast<const unsigned char*>(text.data()),
                     text.size(), nullptr, 0);
  return out;
}

std::string ContentHashHex(const ContentHash& hash) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  for (uint8_t b : hash) {
    hex.push_back(kDigits[b >> 4]);
    hex.push_back(kDigits[b & 0xf]);
  }
  return hex;
}

DedupResult DedupExact(std::vector<Document> docs, int workers) {
  std::vector<ContentHash> hashes(docs.size());
  ParallelFor(docs.size(), workers,
              [&](size_t i) { hashes[i] = HashContent(docs[i].text); });

  DedupResult result;
  std::unordered_map<ContentHash, size_t, ArrayHash> first;
  for (size_t i = 0; i < docs.size(); ++i) {
    StageOutcome outcome = Kept(docs[i], Stage::kExactDedup);
    const auto [it, inserted] = first.emplace(hashes[i], i);
    if (!inserted) {
      const std::string& survivor = docs[it->second].doc_id;
      outcome.verdict = Verdict::kDropped;
      outcome.reason = "exact duplicate of " + survivor;
      outcome.detail["rule"] = "exact duplicate";
      outcome.detail["duplicate_of"] = survivor;
    }
    result.outcomes.push_back(std::move(outcome));
  }
  for (size_t i = 0; i < docs.size(); ++i) {
    if (result.outcomes[i].verdict != Verdict::kDropped) {
      result.kept.push_back(std::move(docs[i]));
    }
  }
  return result;
}

DedupResult DedupNear(std::vector<Document> docs, const MinHashParams& params,
                      int workers) {
  const MinHasher hasher(params);
  std::vector<std::optional<MinHashSignature>> sigs(docs.size());
  ParallelFor(docs.size(), workers, [&](size_t i) {
    try {
      sigs[i] = hasher.Signature(docs[i].text);
    } catch (const TooShortError&) {
      sigs[i].reset();
    }
  });

  const int rows = params.rows_per_band();
  std::vector<std::unordered_map<uint64_t, std::vector<size_t>>> buckets(
      params.num_bands);
  UnionFind clusters(docs.size());
  // Best direct match of each document that joined an earlier cluster.
  std::vector<std::optional<std::pair<size_t, double>>> match(docs.size());
  for (size_t i = 0; i < docs.size(); ++i) {
    if (!sigs[i]) continue;
    std::vector<size_t> candidates;
    for (int band = 0; band < params.num_bands; ++band) {
      auto& members = buckets[band][BandKey(*sigs[i], band, rows)];
      candidates.insert(candidates.end(), members.begin(), members.end());
      members.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const size_t j : candidates) {
      const double similarity = EstimateJaccard(*sigs[i], *sigs[j]);
      if (similarity < params.jaccard_threshold) continue;
      clusters.Union(i, j);
      if (!match[i] || similarity > match[i]->second) {
        match[i] = std::make_pair(j, similarity);
      }
    }
  }

  DedupResult result;
  for (size_t i = 0; i < docs.size(); ++i) {
    StageOutcome outcome = Kept(docs[i], Stage::kNearDedup);
    if (!sigs[i]) {
      outcome.reason = "below shingle length";
    } else if (const size_t root = clusters.Find(i); root != i) {
      const std::string& survivor = docs[root].doc_id;
      outcome.verdict = Verdict::kDropped;
      outcome.reason = "near duplicate of " + survivor;
      outcome.detail["rule"] = "near duplicate";
      outcome.detail["duplicate_of"] = survivor;
      // A document can join a cluster only through a later one.
      if (match[i]) {
        outcome.detail["matched"] = docs[match[i]->first].doc_id;
        outcome.detail["estimated_jaccard"] =
            FormatSimilarity(match[i]->second);
      }
    }
    result.outcomes.push_back(std::move(outcome));
  }
  for (size_t i = 0; i < docs.size(); ++i) {
    if (result.outcomes[i].verdict != Verdict::kDropped) {
      result.kept.push_back(std::move(docs[i]));
    }
  }
  return result;
}

}  // namespace kotoba::corpus
