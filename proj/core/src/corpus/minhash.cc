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

#include "kotoba/corpus/minhash.h"

#include <sodium.h>

#include <algorithm>
#include <limits>
#include <random>

#include "kotoba/unicode.h"

namespace kotoba::corpus {
namespace {

constexpr uint64_t kMersenne61 = (uint64_t{1} << 61) - 1;

uint64_t ModMersenne61(unsigned __int128 x) {
  uint64_t r = static_cast<uint64_t>(x & kMersenne61) +
               static_cast<uint64_t>(x >> 61);
  r = (r & kMersenne61) + (r >> 61);
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

uint64_t LoadLittleEndian64(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

void ValidateMinHashParams(const MinHashParams& params) {
  std::string problems;
  auto add = [&problems](const char* msg) {
    if (!problems.empty()) problems += "; ";
    problems += msg;
  };
  if (params.shingle_size < 1) add("shingle_size must be >= 1");
  if (params.num_permutations < 1) add("num_permutations must be >= 1");
  if (params.num_bands < 1 ||
      (params.num_permutations >= 1 &&
       params.num_permutations % params.num_bands != 0)) {
    add("num_bands must divide num_permutations");
  }
  if (!(params.jaccard_threshold > 0.0 && params.jaccard_threshold <= 1.0)) {
    add("jaccard_threshold must be in (0, 1]");
  }
  if (!problems.empty()) throw ConfigError(problems);
}

MinHasher::MinHasher(const MinHashParams& params) : params_(params) {
  ValidateMinHashParams(params_);
  if (sodium_init() < 0) throw Error("libsodium failed to initialize");
  std::mt19937_64 rng(params_.seed);
  for (int i = 0; i < 2; ++i) {
    const uint64_t word = rng();
    for (int j = 0; j < 8; ++j) {
      key_[i * 8 + j] = static_cast<unsigned char>(word >> (8 * j));
    }
  }
  a_.resize(params_.num_permutations);
  b_.resize(params_.num_permutations);
  for (int k = 0; k < params_.num_permutations; ++k) {
    a_[k] = rng() % (kMersenne61 - 1) + 1;
    b_[k] = rng() % kMersenne61;
  }
}

MinHashSignature MinHasher::Signature(std::string_view text) const {
  const std::vector<unicode::Scalar> scalars = unicode::DecodeScalars(text);
  const size_t n = static_cast<size_t>(params_.shingle_size);
  if (scalars.size() < n) {
    throw TooShortError("text has fewer than " + std::to_string(n) +
                        " characters");
  }
  // Repeated shingles cannot change a minimum, so hash each distinct one once.
  std::vector<uint64_t> hashes;
  hashes.reserve(scalars.size() - n + 1);
  for (size_t i = 0; i + n <= scalars.size(); ++i) {
    const size_t begin = scalars[i].offset;
    const size_t end = scalars[i + n - 1].offset + scalars[i + n - 1].length;
    unsigned char out[crypto_shorthash_BYTES];
    crypto_shorthash(out,
                     reinterpret_cast<const unsigned char*>(text.data() + begin),
                     end - begin, key_);
    hashes.push_back(LoadLittleEndian64(out) % kMersenne61);
  }
  std::sort(hashes.begin(), hashes.end());
  hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());

  MinHashSignature sig(params_.num_permutations,
                       std::numeric_limits<uint64_t>::max());
  for (int k = 0; k < params_.num_permutations; ++k) {
    uint64_t best = std::numeric_limits<uint64_t>::max();
    for (const uint64_t h : hashes) {
      best = std::min(best, ModMersenne61(
                                static_cast<unsigned __int128>(a_[k]) * h + b_[k]));
    }
    sig[k] = best;
  }
  return sig;
}

double EstimateJaccard(const MinHashSignature& a, const MinHashSignature& b) {
  if (a.size() != b.size() || a.empty()) {
    throw InvalidArgumentError("signatures must have the same non-zero length");
  }
  size_t equal = 0;
  for (size_t i = 0; i < a.size(); ++i) equal += a[i] == b[i];
  return static_cast<double>(equal) / static_cast<double>(a.size());
}

}  // namespace kotoba::corpus
