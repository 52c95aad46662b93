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

// Vocabulary artifact: a UTF-8 JSON document
//
//   {
//     "version": 1,
//     "normalization": "nfkc" | "none",
//     "pieces": [{"piece": "<0x0A>", "id": 13, "rank": 13, "kind": "byte"}, ...],
//     "merges": [{"left": "a", "right": "b", "rank": 0}, ...]
//   }
//
// Serialization is canonical: loading a file and serializing it again
// reproduces the same bytes.

#ifndef KOTOBA_TOKENIZER_ARTIFACT_H_
#define KOTOBA_TOKENIZER_ARTIFACT_H_

#include <string>
#include <string_view>

#include "kotoba/tokenizer/tokenizer.h"

namespace kotoba::tokenizer {

inline constexpr int kArtifactVersion = 1;

std::string SerializeTokenizer(const Tokenizer& tokenizer);

// Throws FormatError for malformed JSON, missing fields, an unsupported
// version or any vocabulary/merge invariant violation.
Tokenizer ParseTokenizer(std::string_view json);

void SaveTokenizer(const Tokenizer& tokenizer, const std::string& path);
Tokenizer LoadTokenizer(const std::string& path);

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_ARTIFACT_H_
