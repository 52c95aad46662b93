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

#include "kotoba/tokenizer/pretokenize.h"

#include "kotoba/unicode.h"

namespace kotoba::tokenizer {

std::vector<Span> SplitSegments(std::string_view text) {
  std::vector<Span> segments;
  if (text.empty()) return segments;
  size_t begin = 0;
  bool prev_space = false;
  bool first = true;
  for (const unicode::Scalar& s : unicode::DecodeScalars(text)) {
    const bool space = unicode::IsWhitespace(s.code_point);
    if (!first && space && !prev_space) {
      segments.push_back({begin, s.offset});
      begin = s.offset;
    }
    prev_space = space;
    first = false;
  }
  segments.push_back({begin, text.size()});
  return segments;
}

std::vector<MarkerChunk> SplitAtMarkers(std::string_view text,
                                        std::span<const std::string> markers) {
  std::vector<MarkerChunk> chunks;
  size_t plain_begin = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (size_t m = 0; m < markers.size(); ++m) {
      const std::string& marker = markers[m];
      if (marker.empty() || marker.size() <= best_len) continue;
      if (text.compare(pos, marker.size(), marker) == 0) {
        best = static_cast<int>(m);
        best_len = marker.size();
      }
    }
    if (best < 0) {
      ++pos;
      continue;
    }
    if (plain_begin < pos) chunks.push_back({{plain_begin, pos}, -1});
    chunks.push_back({{pos, pos + best_len}, best});
    pos += best_len;
    plain_begin = pos;
  }
  if (plain_begin < text.size()) {
    chunks.push_back({{plain_begin, text.size()}, -1});
  }
  return chunks;
}

}  // namespace kotoba::tokenizer
