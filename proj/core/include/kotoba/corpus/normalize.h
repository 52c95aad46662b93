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

#ifndef KOTOBA_CORPUS_NORMALIZE_H_
#define KOTOBA_CORPUS_NORMALIZE_H_

#include <string>
#include <string_view>
#include <utility>

#include "kotoba/corpus/document.h"

namespace kotoba::corpus {

// Text normalization, in order:
//   1. CRLF and lone CR become LF.
//   2. Control characters (category Cc) other than TAB and LF are removed.
//   3. NFKC.
//   4. Leading and trailing whitespace is stripped from every line.
//   5. Three or more consecutive blank lines collapse to two.
//   6. Blank lines at the start and end of the document are dropped.
// The result is a fixpoint: NormalizeText(NormalizeText(x)) == NormalizeText(x).
std::string NormalizeText(std::string_view text);

// Verdict is kModified iff the text changed, kKept otherwise.
std::pair<Document, StageOutcome> NormalizeDocument(Document doc);

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_NORMALIZE_H_
