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

#include "kotoba/tokenizer/artifact.h"

#include <nlohmann/json.hpp>

#include <utility>
#include <vector>

#include "kotoba/errors.h"
#include "kotoba/io.h"

namespace kotoba::tokenizer {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
T Field(const Json& object, const char* name, const std::string& where) {
  const auto it = object.find(name);
  if (it == object.end()) {
    throw FormatError(where + ": missing field '" + name + "'");
  }
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw FormatError(where + ": field '" + name + "' has the wrong type");
  }
}

}  // namespace

std::string SerializeTokenizer(const Tokenizer& tokenizer) {
  // One piece or merge per line keeps large artifacts diffable.
  std::string out = "{\n  \"version\": " + std::to_string(kArtifactVersion) +
                    ",\n  \"normalization\": " +
                    Json(NormalizationName(tokenizer.normalization())).dump() +
                    ",\n  \"pieces\": [";
  bool first = true;
  for (const TokenEntry& e : tokenizer.vocabulary().entries()) {
    Json j;
    j["piece"] = e.piece;
    j["id"] = e.id;
    j["rank"] = e.rank;
    j["kind"] = TokenKindName(e.kind);
    out += first ? "\n    " : ",\n    ";
    out += j.dump();
    first = false;
  }
  out += "\n  ],\n  \"merges\": [";
  first = true;
  for (const MergeRule& r : tokenizer.merges().rules()) {
    Json j;
    j["left"] = r.left;
    j["right"] = r.right;
    j["rank"] = r.rank;
    out += first ? "\n    " : ",\n    ";
    out += j.dump();
    first = false;
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Tokenizer ParseTokenizer(std::string_view json) {
  Json doc;
  try {
    doc = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("vocabulary artifact is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object()) {
    throw FormatError("vocabulary artifact must be a JSON object");
  }
  const int version = Field<int>(doc, "version", "artifact");
  if (version != kArtifactVersion) {
    throw FormatError("unsupported vocabulary artifact version " +
                      std::to_string(version));
  }
  const Normalization normalization = ParseNormalization(
      Field<std::string>(doc, "normalization", "artifact"));

  const Json pieces = Field<Json>(doc, "pieces", "artifact");
  const Json merges = Field<Json>(doc, "merges", "artifact");
  if (!pieces.is_array() || !merges.is_array()) {
    throw FormatError("artifact: 'pieces' and 'merges' must be arrays");
  }

  std::vector<TokenEntry> entries;
  entries.reserve(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    const std::string where = "pieces[" + std::to_string(i) + "]";
    const Json& p = pieces[i];
    if (!p.is_object()) throw FormatError(where + ": must be an object");
    entries.push_back({Field<std::string>(p, "piece", where),
                       Field<TokenId>(p, "id", where),
                       Field<int32_t>(p, "rank", where),
                       ParseTokenKind(Field<std::string>(p, "kind", where))});
  }

  std::vector<MergeRule> rules;
  rules.reserve(merges.size());
  for (size_t i = 0; i < merges.size(); ++i) {
    const std::string where = "merges[" + std::to_string(i) + "]";
    const Json& m = merges[i];
    if (!m.is_object()) throw FormatError(where + ": must be an object");
    MergeRule rule;
    rule.left = Field<std::string>(m, "left", where);
    rule.right = Field<std::string>(m, "right", where);
    rule.result = rule.left + rule.right;
    rule.rank = Field<int32_t>(m, "rank", where);
    rules.push_back(std::move(rule));
  }

  return Tokenizer::Create(Vocabulary::Create(std::move(entries)),
                           MergeTable::Create(std::move(rules)),
                           normalization);
}

void SaveTokenizer(const Tokenizer& tokenizer, const std::string& path) {
  WriteFile(path, SerializeTokenizer(tokenizer));
}

Tokenizer LoadTokenizer(const std::string& path) {
  return ParseTokenizer(ReadFile(path));
}

}  // namespace kotoba::tokenizer
