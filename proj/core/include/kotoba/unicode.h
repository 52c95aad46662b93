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

// UTF-8 helpers and the handful of Unicode property queries the toolkit
// needs. Property lookups and NFKC are backed by ICU.

#ifndef KOTOBA_UNICODE_H_
#define KOTOBA_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kotoba::unicode {

// One decoded scalar value and where it sits in the UTF-8 source.
struct Scalar {
  char32_t code_point;
  size_t offset;  // byte offset of the first code unit
  size_t length;  // 1..4
};

bool IsValidUtf8(std::string_view text);

// Throws InvalidArgumentError on ill-formed input.
std::vector<Scalar> DecodeScalars(std::string_view text);
std::u32string DecodeUtf8(std::string_view text);

void AppendUtf8(char32_t code_point, std::string* out);
std::string EncodeUtf8(std::u32string_view code_points);

// Number of scalar values; input must be valid UTF-8.
size_t CountScalars(std::string_view text);

std::string NormalizeNfkc(std::string_view text);

// Unicode White_Space property.
bool IsWhitespace(char32_t c);
// General category L*.
bool IsLetter(char32_t c);
// General category Nd.
bool IsDecimalDigit(char32_t c);
// General category P*.
bool IsPunctuation(char32_t c);
// General category S*.
bool IsSymbol(char32_t c);
// General category Cc.
bool IsControl(char32_t c);
// Script = Han.
bool IsHan(char32_t c);
// Hiragana or Katakana, including the prolonged sound mark.
bool IsKana(char32_t c);
bool IsLatin(char32_t c);

// Simple lowercase mapping for Latin-script letters; other scalars pass
// through unchanged.
char32_t ToLowerLatin(char32_t c);

}  // namespace kotoba::unicode

#endif  // KOTOBA_UNICODE_H_
