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

#include "kotoba/corpus/normalize.h"

#include <vector>

#include "kotoba/unicode.h"

namespace kotoba::corpus {
namespace {

// Strips whitespace scalars from both ends of one line.
std::u32string_view TrimLine(std::u32string_view line) {
  size_t begin = 0;
  size_t end = line.size();
  while (begin < end && unicode::IsWhitespace(line[begin])) ++begin;
  while (end > begin && unicode::IsWhitespace(line[end - 1])) --end;
  return line.substr(begin, end - begin);
}

}  // namespace

std::string NormalizeText(std::string_view text) {
  // Controls must be gone before NFKC: removing one afterwards can expose a
  // composable pair, and the result would no longer be a fixpoint.
  const std::u32string raw = unicode::DecodeUtf8(text);
  std::u32string stripped;
  stripped.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    const char32_t c = raw[i];
    if (c == U'\r') {
      stripped.push_back(U'\n');
      if (i + 1 < raw.size() && raw[i + 1] == U'\n') ++i;
      continue;
    }
    if (c != U'\t' && c != U'\n' && unicode::IsControl(c)) continue;
    stripped.push_back(c);
  }
  const std::u32string cleaned = unicode::DecodeUtf8(
      unicode::NormalizeNfkc(unicode::EncodeUtf8(stripped)));

  std::vector<std::u32string_view> lines;
  size_t begin = 0;
  const std::u32string_view view(cleaned);
  while (true) {
    const size_t end = view.find(U'\n', begin);
    if (end == std::u32string_view::npos) {
      lines.push_back(TrimLine(view.substr(begin)));
      break;
    }
    lines.push_back(TrimLine(view.substr(begin, end - begin)));
    begin = end + 1;
  }

  size_t first = 0;
  size_t last = lines.size();
  while (first < last && lines[first].empty()) ++first;
  while (last > first && lines[last - 1].empty()) --last;

  std::u32string out;
  out.reserve(cleaned.size());
  int blank_run = 0;
  bool emitted = false;
  for (size_t i = first; i < last; ++i) {
    if (lines[i].empty()) {
      if (++blank_run > 2) continue;
    } else {
      blank_run = 0;
    }
    if (emitted) out.push_back(U'\n');
    out.append(lines[i]);
    emitted = true;
  }
  return unicode::EncodeUtf8(out);
}

std::pair<Document, StageOutcome> NormalizeDocument(Document doc) {
  std::string normalized = NormalizeText(doc.text);
  StageOutcome outcome = Kept(doc, Stage::kNormalize);
  if (normalized != doc.text) {
    outcome.verdict = Verdict::kModified;
    outcome.detail["bytes_before"] = std::to_string(doc.text.size());
    outcome.detail["bytes_after"] = std::to_string(normalized.size());
    doc.text = std::move(normalized);
  }
  return {std::move(doc), std::move(outcome)};
}

}  // namespace kotoba::corpus
