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

#include "kotoba/corpus/pii.h"

#include <algorithm>
#include <optional>
#include <set>

#include "kotoba/errors.h"

namespace kotoba::corpus {
namespace {

constexpr char kEmailPattern[] =
    R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})";
constexpr char kPhonePattern[] =
    R"(\+\d{1,3}(?:[- ]?\d{1,4}){2,5}|0\d0?[- ]?\d{4}[- ]?\d{4})";

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiAlnum(char c) {
  return IsAsciiDigit(c) || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool IsLocalPartChar(char c) {
  return IsAsciiAlnum(c) || c == '.' || c == '_' || c == '%' || c == '+' ||
         c == '-';
}

// Built-in boundary rules; user categories accept any regex match.
bool AcceptMatch(std::string_view name, std::string_view text, size_t begin,
                 size_t end) {
  const char before = begin > 0 ? text[begin - 1] : '\0';
  const char after = end < text.size() ? text[end] : '\0';
  if (name == "email") {
    return !IsLocalPartChar(before) &&
           !(IsAsciiAlnum(after) || after == '-' || after == '_');
  }
  if (name == "phone") {
    if (IsAsciiDigit(before) || before == '+' || IsAsciiDigit(after)) {
      return false;
    }
    if (text[begin] == '+') {
      const auto digits = std::count_if(text.begin() + begin,
                                        text.begin() + end, IsAsciiDigit);
      return digits >= 8 && digits <= 15;
    }
    return true;
  }
  return true;
}

}  // namespace

PiiRedactor::PiiRedactor() : PiiRedactor(std::vector<PiiCategory>{}) {}

PiiRedactor::PiiRedactor(std::vector<PiiCategory> extra) {
  std::vector<PiiCategory> all = {
      {"email", kEmailPattern, "[EMAIL]"},
      {"phone", kPhonePattern, "[PHONE]"},
  };
  all.insert(all.end(), extra.begin(), extra.end());
  std::set<std::string> names;
  for (PiiCategory& c : all) {
    if (c.name.empty() || !names.insert(c.name).second) {
      throw ConfigError("PII category names must be unique and non-empty: '" +
                        c.name + "'");
    }
    try {
      std::regex re(c.pattern, std::regex::ECMAScript | std::regex::optimize);
      categories_.push_back({std::move(c), std::move(re)});
    } catch (const std::regex_error& e) {
      throw ConfigError("PII category '" + c.name +
                        "' has an invalid pattern: " + e.what());
    }
  }
}

std::vector<std::string> PiiRedactor::category_names() const {
  std::vector<std::string> names;
  for (const Compiled& c : categories_) names.push_back(c.category.name);
  return names;
}

RedactionResult PiiRedactor::Redact(std::string_view text) const {
  RedactionResult result;
  for (const Compiled& c : categories_) result.counts[c.category.name] = 0;

  // Next accepted match of each category at or after `from`.
  auto next_match = [&](const Compiled& c,
                        size_t from) -> std::optional<tokenizer::Span> {
    size_t pos = from;
    while (pos < text.size()) {
      std::match_results<std::string_view::const_iterator> m;
      if (!std::regex_search(text.begin() + pos, text.end(), m, c.regex)) {
        return std::nullopt;
      }
      const size_t begin = pos + static_cast<size_t>(m.position(0));
      const size_t end = begin + static_cast<size_t>(m.length(0));
      if (end > begin && AcceptMatch(c.category.name, text, begin, end)) {
        return tokenizer::Span{begin, end};
      }
      pos = begin + 1;
    }
    return std::nullopt;
  };

  std::vector<std::optional<tokenizer::Span>> pending(categories_.size());
  for (size_t i = 0; i < categories_.size(); ++i) {
    pending[i] = next_match(categories_[i], 0);
  }
  size_t pos = 0;
  while (true) {
    int best = -1;
    for (size_t i = 0; i < categories_.size(); ++i) {
      if (pending[i] && pending[i]->begin < pos) {
        pending[i] = next_match(categories_[i], pos);
      }
      if (pending[i] && (best < 0 || pending[i]->begin < pending[best]->begin)) {
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    const tokenizer::Span span = *pending[best];
    const PiiCategory& category = categories_[best].category;
    result.text.append(text.substr(pos, span.begin - pos));
    result.text += category.placeholder;
    result.redactions.push_back({category.name, span});
    ++result.counts[category.name];
    pos = span.end;
    pending[best] = next_match(categories_[best], pos);
  }
  result.text.append(text.substr(pos));
  return result;
}

std::pair<Document, StageOutcome> PiiRedactor::Apply(Document doc) const {
  RedactionResult r = Redact(doc.text);
  StageOutcome outcome = Kept(doc, Stage::kPii);
  if (!r.redactions.empty()) {
    outcome.verdict = Verdict::kModified;
    for (const auto& [name, count] : r.counts) {
      outcome.detail[name] = std::to_string(count);
    }
    doc.text = std::move(r.text);
  }
  return {std::move(doc), std::move(outcome)};
}

}  // namespace kotoba::corpus
