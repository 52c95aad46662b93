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

// JSON-lines document I/O. One document per line:
//   {"id": "...", "text": "...", "meta": {...}}
// `id` and `text` are required strings; `meta` is an optional object whose
// non-string values are kept as their JSON text.

#ifndef KOTOBA_CORPUS_JSONL_H_
#define KOTOBA_CORPUS_JSONL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kotoba/corpus/document.h"

namespace kotoba::corpus {

// Never throws for bad records: a line that is not valid JSON, lacks the
// required fields or carries ill-formed UTF-8 yields a Document with
// `decode_error` set and doc_id "line-<n>" (1-based) unless an id was
// readable.
Document ParseDocumentLine(std::string_view line, size_t line_number);

// Blank lines are skipped. Throws IoError if the file cannot be read.
std::vector<Document> ReadDocuments(const std::string& path);
std::vector<Document> ParseDocuments(std::string_view content);

// `stage_verdicts`, when non-empty, is written as the object meta.pipeline.
std::string SerializeDocument(
    const Document& doc,
    const std::map<std::string, std::string>& stage_verdicts = {});

// Reads a text corpus. Files ending in ".jsonl" contribute each record's
// `text` (a malformed record is a FormatError naming the line); any other
// file contributes one text per line.
std::vector<std::string> ReadTextCorpus(const std::string& path);

}  // namespace kotoba::corpus

#endif  // KOTOBA_CORPUS_JSONL_H_
