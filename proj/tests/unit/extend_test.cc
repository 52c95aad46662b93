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

#include "kotoba/tokenizer/extend.h"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kotoba/corpus/jsonl.h"
#include "kotoba/errors.h"
#include "kotoba/tokenizer/cpt.h"
#include "kotoba/tokenizer/trainer.h"
#include "kotoba/unicode.h"
#include "test_util.h"

namespace kotoba::tokenizer {
namespace {

class ExtendTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    en_ = new std::vector<std::string>(
        corpus::ReadTextCorpus(testing::FixturePath("en_corpus.txt")));
    ja_ = new std::vector<std::string>(
        corpus::ReadTextCorpus(testing::FixturePath("ja_sample.txt")));
    base_ = new Tokenizer(
        BuildTokenizer(TrainMerges(*en_, 150, {}), Normalization::kNfkc));
  }
  static void TearDownTestSuite() {
    delete base_;
    delete ja_;
    delete en_;
  }

  static void ExpectBasePreserved(const Tokenizer& ext) {
    const Vocabulary& bv = base_->vocabulary();
    ASSERT_GE(ext.vocabulary().total_size(), bv.total_size());
    for (TokenId id = 0; id < bv.total_size(); ++id) {
      EXPECT_EQ(ext.vocabulary().entry(id), bv.entry(id));
    }
    for (TokenId id = bv.total_size(); id < ext.vocabulary().total_size();
         ++id) {
      EXPECT_EQ(ext.vocabulary().entry(id).kind, TokenKind::kExtension);
      EXPECT_EQ(ext.vocabulary().entry(id).rank, id);
    }
    ASSERT_GE(ext.merges().size(), base_->merges().size());
    for (size_t i = 0; i < base_->merges().size(); ++i) {
      EXPECT_EQ(ext.merges().rules()[i], base_->merges().rules()[i]);
    }
  }

  static std::vector<std::string>* en_;
  static std::vector<std::string>* ja_;
  static Tokenizer* base_;
};

std::vector<std::string>* ExtendTest::en_ = nullptr;
std::vector<std::string>* ExtendTest::ja_ = nullptr;
Tokenizer* ExtendTest::base_ = nullptr;

TEST_F(ExtendTest, ZeroBudgetReturnsBase) {
  EXPECT_EQ(ExtendVocabulary(*base_, *ja_, 0), *base_);
}

TEST_F(ExtendTest, AddsExactlyBudgetPieces) {
  for (int budget : {1, 7, 300}) {
    SCOPED_TRACE(budget);
    const Tokenizer ext = ExtendVocabulary(*base_, *ja_, budget);
    EXPECT_EQ(ext.vocabulary().total_size(),
              base_->vocabulary().total_size() + budget);
    ExpectBasePreserved(ext);
  }
}

TEST_F(ExtendTest, BudgetCappedByAvailable) {
  const std::vector<std::string> tiny = {"漢字"};
  const Tokenizer ext = ExtendVocabulary(*base_, tiny, 1000);
  // Two new characters and the merge "漢字".
  EXPECT_EQ(ext.vocabulary().total_size(),
            base_->vocabulary().total_size() + 3);
  ExpectBasePreserved(ext);
  EXPECT_EQ(ext.Encode("漢字").ids.size(), 1u);
}

TEST_F(ExtendTest, AlphabetComesFirst) {
  const Tokenizer ext = ExtendVocabulary(*base_, *ja_, 20);
  for (TokenId id = base_->vocabulary().total_size();
       id < ext.vocabulary().total_size(); ++id) {
    EXPECT_EQ(unicode::CountScalars(ext.vocabulary().entry(id).piece), 1u);
  }
}

TEST_F(ExtendTest, SkipsPiecesAlreadyInBase) {
  const Tokenizer ext = ExtendVocabulary(*base_, *en_, 50);
  for (TokenId id = base_->vocabulary().total_size();
       id < ext.vocabulary().total_size(); ++id) {
    EXPECT_FALSE(base_->vocabulary().Contains(ext.vocabulary().entry(id).piece));
  }
}

TEST_F(ExtendTest, Deterministic) {
  ExtendOptions many;
  many.workers = 8;
  EXPECT_EQ(ExtendVocabulary(*base_, *ja_, 200),
            ExtendVocabulary(*base_, *ja_, 200, many));
}

TEST_F(ExtendTest, ExtendedTokenizerRoundTrips) {
  const Tokenizer ext = ExtendVocabulary(*base_, *ja_, 500);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::string text = testing::RandomUnicode(rng, 50);
    ASSERT_EQ(ext.Decode(ext.Encode(text).ids), text);
  }
  for (const std::string& line : *ja_) {
    ASSERT_EQ(ext.Decode(ext.Encode(line).ids), line);
  }
}

TEST_F(ExtendTest, InvalidArguments) {
  EXPECT_THROW(ExtendVocabulary(*base_, *ja_, -1), InvalidArgumentError);
  EXPECT_THROW(ExtendVocabulary(*base_, {}, 5), InvalidArgumentError);
}

TEST_F(ExtendTest, RaisesCharPerTokenRate) {
  const CptReport before = CharPerTokenRate(*base_, *ja_);
  const CptReport after =
      CharPerTokenRate(ExtendVocabulary(*base_, *ja_, 400), *ja_);
  EXPECT_LT(before.rate, 1.0);
  EXPECT_EQ(before.char_count, after.char_count);
  EXPECT_GT(after.rate, before.rate);
}

TEST(CptTest, CountsScalarsAndTokens) {
  const Tokenizer tok = Tokenizer::ByteFallback(Normalization::kNone);
  const std::vector<std::string> corpus = {"ab", "日本"};
  const CptReport r = CharPerTokenRate(tok, corpus);
  EXPECT_EQ(r.char_count, 4u);
  EXPECT_EQ(r.token_count, 8u);
  EXPECT_DOUBLE_EQ(r.rate, 0.5);
  EXPECT_EQ(CountTokens(tok, "日本"), 6u);
}

TEST(CptTest, AppliesNormalization) {
  const Tokenizer tok = Tokenizer::ByteFallback(Normalization::kNfkc);
  const std::vector<std::string> corpus = {"ｱ"};  // half-width katakana
  const CptReport r = CharPerTokenRate(tok, corpus);
  EXPECT_EQ(r.char_count, 1u);
  EXPECT_EQ(r.token_count, 3u);
}

TEST(CptTest, WorkerCountDoesNotMatter) {
  const auto corpus =
      corpus::ReadTextCorpus(testing::FixturePath("ja_sample.txt"));
  const Tokenizer tok =
      BuildTokenizer(TrainMerges(corpus, 100, {}), Normalization::kNfkc);
  EXPECT_EQ(CharPerTokenRate(tok, corpus, 1), CharPerTokenRate(tok, corpus, 8));
}

TEST(CptTest, EmptyCorpusIsAnError) {
  const Tokenizer tok = Tokenizer::ByteFallback(Normalization::kNone);
  EXPECT_THROW(CharPerTokenRate(tok, {}), InvalidArgumentError);
  const std::vector<std::string> blank = {"", ""};
  EXPECT_THROW(CharPerTokenRate(tok, blank), InvalidArgumentError);
}

}  // namespace
}  // namespace kotoba::tokenizer
