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

#ifndef KOTOBA_TOKENIZER_PRETOKENIZE_H_
#define KOTOBA_TOKENIZER_PRETOKENIZE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kotoba::tokenizer {

// A byte range [begin, end) of the source text.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  bool operator==(const Span&) const = default;
};

// Splits valid UTF-8 text into merge segments. A new segment starts at every
// whitespace scalar that follows a non-whitespace scalar, so whitespace is
// carried as the prefix of the next word ("a b" -> "a", " b") and trailing
// whitespace forms its own segment. Runs without whitespace, such as
// Japanese sentences, stay whole. The returned spans partition the input.
std::vector<Span> SplitSegments(std::string_view text);

// A piece of the input that either matches one of the atomic markers or
// is ordinary text between markers.
struct MarkerChunk {
  Span span;
  int marker = -1;  // index into `markers`, or -1 for plain text
};

// Partitions `text` at occurrences of `markers` (leftmost, longest first).
// Empty markers are ignored.
std::vector<MarkerChunk> SplitAtMarkers(std::string_view text,
                                        std::span<const std::string> markers);

}  // namespace kotoba::tokenizer

#endif  // KOTOBA_TOKENIZER_PRETOKENIZE_H_
