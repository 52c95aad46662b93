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

// train-tokenizer, extend-vocab and measure-cpt.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <memory>

#include "commands.h"
#include "kotoba/corpus/jsonl.h"
#include "kotoba/errors.h"
#include "kotoba/tokenizer/artifact.h"
#include "kotoba/tokenizer/cpt.h"
#include "kotoba/tokenizer/extend.h"
#include "kotoba/tokenizer/trainer.h"

namespace kotoba::cli {
namespace {

using Json = nlohmann::ordered_json;
using tokenizer::CptReport;
using tokenizer::Tokenizer;

std::string FormatRate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", rate);
  return buf;
}

Json CptJson(const CptReport& r) {
  return {{"char_count", r.char_count},
          {"token_count", r.token_count},
          {"rate", r.rate}};
}

std::vector<std::string> ReadCorpus(const std::string& path) {
  return corpus::ReadTextCorpus(path);
}

}  // namespace

CommandRunner AddTrainTokenizer(CLI::App& app) {
  struct Options {
    CommonOptions common;
    std::string corpus;
    std::string out;
    int merges = 0;
    std::string normalization = "nfkc";
    int max_piece_chars = 16;
  };
  auto o = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "train-tokenizer", "Learn a byte-fallback BPE tokenizer from a corpus");
  sub->add_option("--corpus", o->corpus, "Text or JSON-lines corpus")
      ->required();
  sub->add_option("--merges", o->merges, "Maximum number of merge rules")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out", o->out, "Tokenizer artifact to write")->required();
  sub->add_option("--normalization", o->normalization, "nfkc or none")
      ->check(CLI::IsMember({"nfkc", "none"}));
  sub->add_option("--max-piece-chars", o->max_piece_chars,
                  "Longest learned piece, in characters")
      ->check(CLI::PositiveNumber);
  AddCommonOptions(sub, &o->common, "table");

  return [o](std::ostream& out) {
    const std::vector<std::string> corpus = ReadCorpus(o->corpus);
    tokenizer::TrainOptions options;
    options.normalization = tokenizer::ParseNormalization(o->normalization);
    options.max_piece_chars = o->max_piece_chars;
    options.workers = o->common.workers;
    const tokenizer::TrainResult result =
        tokenizer::TrainMerges(corpus, o->merges, options);
    const Tokenizer tok =
        tokenizer::BuildTokenizer(result, options.normalization);
    tokenizer::SaveTokenizer(tok, o->out);

    const size_t pieces = tok.vocabulary().total_size();
    if (o->common.format == "json") {
      out << Json{{"pieces", pieces},
                  {"learned_pieces", result.entries.size()},
                  {"merges", tok.merges().size()}}
                 .dump(2)
          << "\n";
    } else {
      out << "pieces         " << pieces << "\n"
          << "learned pieces " << result.entries.size() << "\n"
          << "merges         " << tok.merges().size() << "\n";
    }
    return 0;
  };
}

CommandRunner AddExtendVocab(CLI::App& app) {
  struct Options {
    CommonOptions common;
    std::string base;
    std::string corpus;
    std::string sample;
    std::string out;
    int budget = 0;
    int max_piece_chars = 16;
  };
  auto o = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "extend-vocab", "Graft new pieces onto a frozen base tokenizer");
  sub->add_option("--base", o->base, "Base tokenizer artifact")->required();
  sub->add_option("--budget", o->budget, "Number of pieces to add")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--corpus", o->corpus, "Corpus to learn pieces from")
      ->required();
  sub->add_option("--out", o->out, "Extended artifact to write")->required();
  sub->add_option("--sample", o->sample,
                  "Corpus for the before/after CPT report (default: --corpus)");
  sub->add_option("--max-piece-chars", o->max_piece_chars,
                  "Longest learned piece, in characters")
      ->check(CLI::PositiveNumber);
  AddCommonOptions(sub, &o->common, "table");

  return [o](std::ostream& out) {
    const Tokenizer base = tokenizer::LoadTokenizer(o->base);
    const std::vector<std::string> corpus = ReadCorpus(o->corpus);
    tokenizer::ExtendOptions options;
    options.max_piece_chars = o->max_piece_chars;
    options.workers = o->common.workers;
    const Tokenizer extended =
        tokenizer::ExtendVocabulary(base, corpus, o->budget, options);
    tokenizer::SaveTokenizer(extended, o->out);

    const std::vector<std::string> sample =
        o->sample.empty() ? corpus : ReadCorpus(o->sample);
    const CptReport before =
        tokenizer::CharPerTokenRate(base, sample, o->common.workers);
    const CptReport after =
        tokenizer::CharPerTokenRate(extended, sample, o->common.workers);
    const size_t base_size = base.vocabulary().total_size();
    const size_t extended_size = extended.vocabulary().total_size();
    if (o->common.format == "json") {
      out << Json{{"base_size", base_size},
                  {"extended_size", extended_size},
                  {"added", extended_size - base_size},
                  {"cpt_before", CptJson(before)},
                  {"cpt_after", CptJson(after)}}
                 .dump(2)
          << "\n";
    } else {
      out << "size  " << base_size << " -> " << extended_size << " (+"
          << extended_size - base_size << ")\n"
          << "cpt   " << FormatRate(before.rate) << " -> "
          << FormatRate(after.rate) << "\n";
    }
    return 0;
  };
}

CommandRunner AddMeasureCpt(CLI::App& app) {
  struct Options {
    CommonOptions common;
    std::string tokenizer;
    std::string corpus;
  };
  auto o = std::make_shared<Options>();
  CLI::App* sub = app.add_subcommand(
      "measure-cpt", "Characters per token of a tokenizer on a corpus");
  sub->add_option("--tokenizer", o->tokenizer, "Tokenizer artifact")
      ->required();
  sub->add_option("--corpus", o->corpus, "Text or JSON-lines corpus")
      ->required();
  AddCommonOptions(sub, &o->common, "json");

  return [o](std::ostream& out) {
    const Tokenizer tok = tokenizer::LoadTokenizer(o->tokenizer);
    const std::vector<std::string> corpus = ReadCorpus(o->corpus);
    const CptReport report =
        tokenizer::CharPerTokenRate(tok, corpus, o->common.workers);
    if (o->common.format == "json") {
      Json j = {{"version", 1}};
      const Json fields = CptJson(report);
      for (const auto& [key, value] : fields.items()) j[key] = value;
      out << j.dump(2) << "\n";
    } else {
      out << "chars   " << report.char_count << "\n"
          << "tokens  " << report.token_count << "\n"
          << "rate    " << FormatRate(report.rate) << "\n";
    }
    return 0;
  };
}

}  // namespace kotoba::cli
