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

#include "kotoba/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

#include <cstdint>

#include "kotoba/errors.h"

namespace kotoba::unicode {
namespace {

// Returns the code point at `*pos` and advances it, or -1 on ill-formed
// input (overlong forms, surrogates and out-of-range values included).
int32_t NextScalar(std::string_view text, int32_t* pos) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  UChar32 c;
  U8_NEXT(s, *pos, length, c);
  return c;
}

int8_t Category(char32_t c) { return u_charType(static_cast<UChar32>(c)); }

}  // namespace

bool IsValidUtf8(std::string_view text) {
  int32_t pos = 0;
  while (pos < static_cast<int32_t>(text.size())) {
    if (NextScalar(text, &pos) < 0) return false;
  }
  return true;
}

std::vector<Scalar> DecodeScalars(std::string_view text) {
  std::vector<Scalar> out;
  out.reserve(text.size());
  int32_t pos = 0;
  while (pos < static_cast<int32_t>(text.size())) {
    const int32_t start = pos;
    const int32_t c = NextScalar(text, &pos);
    if (c < 0) {
      throw InvalidArgumentError("ill-formed UTF-8 at byte offset " +
                                 std::to_string(start));
    }
    out.push_back({static_cast<char32_t>(c), static_cast<size_t>(start),
                   static_cast<size_t>(pos - start)});
  }
  return out;
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (const Scalar& s : DecodeScalars(text)) out.push_back(s.code_point);
  return out;
}

void AppendUtf8(char32_t code_point, std::string* out) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(code_point), error);
  if (error) {
    throw InvalidArgumentError("code point is not a Unicode scalar value");
  }
  out->append(reinterpret_cast<const char*>(buf), n);
}

std::string EncodeUtf8(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size() * 3);
  for (char32_t c : code_points) AppendUtf8(c, &out);
  return out;
}

size_t CountScalars(std::string_view text) {
  size_t n = 0;
  for (char ch : text) {
    // Every byte that is not a continuation byte starts a scalar.
    if ((static_cast<uint8_t>(ch) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string NormalizeNfkc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkc = icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(std::string("ICU NFKC unavailable: ") + u_errorName(status));
  }
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (nfkc->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = nfkc->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("NFKC normalization failed: ") +
                u_errorName(status));
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool IsWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool IsLetter(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_L_MASK) != 0;
}

bool IsDecimalDigit(char32_t c) {
  return Category(c) == U_DECIMAL_DIGIT_NUMBER;
}

bool IsPunctuation(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_P_MASK) != 0;
}

bool IsSymbol(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_S_MASK) != 0;
}

bool IsControl(char32_t c) { return Category(c) == U_CONTROL_CHAR; }

bool IsHan(char32_t c) {
  UErrorCode status = U_ZERO_ERROR;
  return uscript_getScript(static_cast<UChar32>(c), &status) == USCRIPT_HAN;
}

bool IsKana(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  UErrorCode status = U_ZERO_ERROR;
  const UScriptCode script = uscript_getScript(cp, &status);
  if (script == USCRIPT_HIRAGANA || script == USCRIPT_KATAKANA) return true;
  if (script != USCRIPT_COMMON && script != USCRIPT_INHERITED) return false;
  // Shared marks such as U+30FC count only when every script that uses
  // them is kana; U+3002 is also used by Han and does not.
  UScriptCode scripts[8];
  const int n = uscript_getScriptExtensions(cp, scripts, 8, &status);
  if (U_FAILURE(status) || n == 0) return false;
  for (int i = 0; i < n; ++i) {
    if (scripts[i] != USCRIPT_HIRAGANA && scripts[i] != USCRIPT_KATAKANA) {
      return false;
    }
  }
  return true;
}

bool IsLatin(char32_t c) {
  UErrorCode status = U_ZERO_ERROR;
  return uscript_getScript(static_cast<UChar32>(c), &status) == USCRIPT_LATIN;
}

char32_t ToLowerLatin(char32_t c) {
  if (c < 0x80) {
    return (c >= U'A' && c <= U'Z') ? c + (U'a' - U'A') : c;
  }
  if (!IsLatin(c)) return c;
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
}

}  // namespace kotoba::unicode
