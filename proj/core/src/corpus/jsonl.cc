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

#include "kotoba/corpus/jsonl.h"

#include <nlohmann/json.hpp>

#include "kotoba/errors.h"
#include "kotoba/io.h"
#include "kotoba/unicode.h"

namespace kotoba::corpus {
namespace {

using Json = nlohmann::ordered_json;

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Document ParseDocumentLine(std::string_view line, size_t line_number) {
  Document doc;
  doc.doc_id = "line-" + std::to_string(line_number);
  auto fail = [&doc](std::string reason) {
    doc.text.clear();
    doc.meta.clear();
    doc.decode_error = std::move(reason);
    return doc;
  };

  if (!unicode::IsValidUtf8(line)) return fail("record is not valid UTF-8");
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error&) {
    return fail("record is not valid JSON");
  }
  if (!j.is_object()) return fail("record is not a JSON object");

  const auto id = j.find("id");
  if (id != j.end() && id->is_string() && !id->get<std::string>().empty()) {
    doc.doc_id = id->get<std::string>();
  } else {
    return fail("missing string field 'id'");
  }
  const auto text = j.find("text");
  if (text == j.end() || !text->is_string()) {
    return fail("missing string field 'text'");
  }
  doc.text = text->get<std::string>();

  const auto meta = j.find("meta");
  if (meta != j.end() && !meta->is_null()) {
    if (!meta->is_object()) return fail("'meta' must be an object");
    for (const auto& [key, value] : meta->items()) {
      doc.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return doc;
}

std::vector<Document> ParseDocuments(std::string_view content) {
  std::vector<Document> docs;
  const std::vector<std::string> lines = SplitLines(content);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    docs.push_back(ParseDocumentLine(lines[i], i + 1));
  }
  return docs;
}

std::vector<Document> ReadDocuments(const std::string& path) {
  return ParseDocuments(ReadFile(path));
}

std::string SerializeDocument(
    const Document& doc,
    const std::map<std::string, std::string>& stage_verdicts) {
  Json j;
  j["id"] = doc.doc_id;
  j["text"] = doc.text;
  if (!doc.meta.empty() || !stage_verdicts.empty()) {
    Json meta = Json::object();
    for (const auto& [key, value] : doc.meta) {
      if (!stage_verdicts.empty() && key == "pipeline") continue;
      meta[key] = value;
    }
    if (!stage_verdicts.empty()) {
      Json pipeline = Json::object();
      for (const auto& [stage, verdict] : stage_verdicts) {
        pipeline[stage] = verdict;
      }
      meta["pipeline"] = std::move(pipeline);
    }
    j["meta"] = std::move(meta);
  }
  return j.dump();
}

std::vector<std::string> ReadTextCorpus(const std::string& path) {
  const std::string content = ReadFile(path);
  std::vector<std::string> texts;
  const std::vector<std::string> lines = SplitLines(content);
  const bool jsonl = EndsWith(path, ".jsonl");
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!jsonl) {
      std::string line = lines[i];
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!unicode::IsValidUtf8(line)) {
        throw FormatError(path + ":" + std::to_string(i + 1) +
                          ": line is not valid UTF-8");
      }
      texts.push_back(std::move(line));
      continue;
    }
    if (IsBlank(lines[i])) continue;
    // Only `text` is needed here; ids are optional for training corpora.
    Json j;
    try {
      j = Json::parse(lines[i]);
    } catch (const Json::parse_error&) {
      j = nullptr;
    }
    const auto text = j.is_object() ? j.find("text") : j.end();
    if (!j.is_object() || text == j.end() || !text->is_string()) {
      throw FormatError(path + ":" + std::to_string(i + 1) +
                        ": expected a JSON object with a string 'text'");
    }
    texts.push_back(text->get<std::string>());
  }
  return texts;
}

}  // namespace kotoba::corpus
