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

// MinHash signatures over character shingles.

#ifndef KOTOBA_CORPUS_MINHASH_H_
#define KOTOBA_CORPUS_MINHASH_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "kotoba/errors.h"

namespace kotoba::corpus {

struct MinHashParams {
  int shingle_size = 5;  // scalar values per shingle
  int num_permutations = 128;
  int num_bands = 32;
  double jaccard_threshold = 0.8;
  uint64_t seed = 42;

  int rows_per_band() const { return num_permutations / num_bands; }
};

// Throws ConfigError unless shingle_size >= 1, num_permutations >= 1,
// num_bands divides num_permutations and jaccard_threshold is in (0, 1].
void ValidateMinHashParams(const MinHashParams& params);

// Raised for texts with fewer scalar values than the shingle size.
class TooShortError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

using MinHashSignature = std::vector<uint64_t>;

// Each permutation k maps a shingle's SipHash-2-4 value h to
// (a_k * h + b_k) mod (2^61 - 1). The SipHash key and the (a_k, b_k) pairs
// are drawn from std::mt19937_64 seeded with `seed`, whose output sequence
// is fixed by the standard, so signatures agree across platforms.
class MinHasher {
 public:
  explicit MinHasher(const MinHashParams& params);

  // Throws TooShortError when the text is shorter than one shingle.
  MinHashSignature Signature(std::string_view text) const;

  const MinHashParams& params() const { return params_; }

 private:
  MinHashParams params_;
  unsigned char key_[16];
  std::vector<uint64_t> a_;
  std::vector<uint64_t> b_;
};

// Fraction of positions at which two equal-length signatures agree.
double EstimateJaccard(const MinHashSignature& a, const MinHashSignature& b);

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_MINHASH_H_
