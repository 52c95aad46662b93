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

// PII redaction for normalized text.
//
// Built-in categories:
//   email  -> "[EMAIL]"   local@domain.tld
//   phone  -> "[PHONE]"   +CC international numbers (8-15 digits) and the
//                         Japanese 0X0-XXXX-XXXX / 0X-XXXX-XXXX forms with
//                         '-', ' ' or no separator
// Matches must not touch an adjacent digit (or, for emails, an adjacent
// address character). Additional categories can be registered with their
// own pattern and placeholder.

#ifndef KOTOBA_CORPUS_PII_H_
#define KOTOBA_CORPUS_PII_H_

#include <map>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kotoba/corpus/document.h"
#include "kotoba/tokenizer/pretokenize.h"

namespace kotoba::corpus {

struct PiiCategory {
  std::string name;         // e.g. "email"; used as the detail/report key
  std::string pattern;      // ECMAScript regex
  std::string placeholder;  // e.g. "[EMAIL]"
};

struct Redaction {
  std::string category;
  tokenizer::Span source;  // byte range in the input text
};

struct RedactionResult {
  std::string text;
  std::vector<Redaction> redactions;  // in text order
  std::map<std::string, int> counts;  // per category, zero entries included
};

class PiiRedactor {
 public:
  // Email and phone only.
  PiiRedactor();
  // Built-ins plus `extra`, which are tried after them. Throws ConfigError
  // for an invalid pattern or a duplicate name.
  explicit PiiRedactor(std::vector<PiiCategory> extra);

  RedactionResult Redact(std::string_view text) const;

  // Verdict kModified with per-category counts in `detail` when anything
  // was redacted, kKept otherwise.
  std::pair<Document, StageOutcome> Apply(Document doc) const;

  std::vector<std::string> category_names() const;

 private:
  struct Compiled {
    PiiCategory category;
    std::regex regex;
  };
  std::vector<Compiled> categories_;
};

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_PII_H_
