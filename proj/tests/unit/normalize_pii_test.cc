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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kotoba/corpus/normalize.h"
#include "kotoba/corpus/pii.h"
#include "kotoba/errors.h"
#include "test_util.h"

namespace kotoba::corpus {
namespace {

TEST(NormalizeTest, Cases) {
  EXPECT_EQ(NormalizeText("a\r\nb\rc"), "a\nb\nc");
  EXPECT_EQ(NormalizeText("a\x07" "b\x1B"), "ab");
  EXPECT_EQ(NormalizeText("a\tb"), "a\tb");
  EXPECT_EQ(NormalizeText("ＡＢＣ　ｶﾞ"), "ABC ガ");
  EXPECT_EQ(NormalizeText("  a  \n\t b\t"), "a\nb");
  EXPECT_EQ(NormalizeText("a\n\n\n\n\nb"), "a\n\n\nb");
  EXPECT_EQ(NormalizeText("a\n\n\nb"), "a\n\n\nb");
  EXPECT_EQ(NormalizeText("\n\n  \na\n \n"), "a");
  EXPECT_EQ(NormalizeText(""), "");
  EXPECT_EQ(NormalizeText(" \n \n"), "");
}

TEST(NormalizeTest, ControlRemovalBeforeComposition) {
  // A control between a base and a combining mark must not block NFKC.
  const std::string once = NormalizeText("e\x01\xCC\x81");
  EXPECT_EQ(once, "\xC3\xA9");
  EXPECT_EQ(NormalizeText(once), once);
}

TEST(NormalizeTest, Idempotent) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 3000; ++i) {
    const std::string text = testing::RandomUnicode(rng, 60);
    const std::string once = NormalizeText(text);
    ASSERT_EQ(NormalizeText(once), once);
  }
}

TEST(NormalizeTest, DocumentVerdict) {
  auto [doc, outcome] = NormalizeDocument({"d1", "ａ\r\n", {}, std::nullopt});
  EXPECT_EQ(doc.text, "a");
  EXPECT_EQ(outcome.verdict, Verdict::kModified);
  auto [same, kept] = NormalizeDocument({"d2", "a", {}, std::nullopt});
  EXPECT_EQ(kept.verdict, Verdict::kKept);
  EXPECT_EQ(same.text, "a");
}

class PiiFixtureTest : public ::testing::TestWithParam<nlohmann::json> {};

TEST_P(PiiFixtureTest, MatchesLabel) {
  const nlohmann::json& row = GetParam();
  const RedactionResult r = PiiRedactor().Redact(row["text"].get<std::string>());
  if (row["positive"].get<bool>()) {
    const std::string category = row["category"];
    EXPECT_GE(r.counts.at(category), 1) << row["text"];
    EXPECT_NE(r.text.find(category == "email" ? "[EMAIL]" : "[PHONE]"),
              std::string::npos);
  } else {
    EXPECT_TRUE(r.redactions.empty()) << row["text"] << " -> " << r.text;
    EXPECT_EQ(r.text, row["text"].get<std::string>());
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, PiiFixtureTest,
    ::testing::ValuesIn(testing::ReadJsonLines(
        testing::FixturePath("pii_cases.jsonl"))),
    [](const ::testing::TestParamInfo<nlohmann::json>& info) {
      std::string id = info.param["id"];
      for (char& c : id) {
        if (c == '-') c = '_';
      }
      return id;
    });

TEST(PiiTest, RedactsInTextOrder) {
  const RedactionResult r =
      PiiRedactor().Redact("tel 03-1234-5678 mail a.b@example.com end");
  EXPECT_EQ(r.text, "tel [PHONE] mail [EMAIL] end");
  ASSERT_EQ(r.redactions.size(), 2u);
  EXPECT_EQ(r.redactions[0].category, "phone");
  EXPECT_EQ(r.redactions[0].source, (tokenizer::Span{4, 16}));
  EXPECT_EQ(r.redactions[1].category, "email");
  EXPECT_EQ(r.counts.at("email"), 1);
  EXPECT_EQ(r.counts.at("phone"), 1);
}

TEST(PiiTest, ZeroCountsArePresent) {
  const RedactionResult r = PiiRedactor().Redact("nothing here");
  EXPECT_EQ(r.counts.at("email"), 0);
  EXPECT_EQ(r.counts.at("phone"), 0);
}

TEST(PiiTest, RedactionIsSafe) {
  // After one pass nothing redactable remains, and no original PII string
  // survives in the output.
  std::mt19937_64 rng(23);
  const std::vector<std::string> pii = {"foo@bar.com", "03-1234-5678",
                                        "+81 90 1234 5678", "x.y+z@a-b.co.jp",
                                        "09012345678"};
  const PiiRedactor redactor;
  for (int i = 0; i < 500; ++i) {
    std::string text;
    for (int k = 0; k < 4; ++k) {
      text += testing::RandomJapanese(rng, 5);
      text += " ";
      text += pii[rng() % pii.size()];
      text += " ";
    }
    const RedactionResult r = redactor.Redact(text);
    EXPECT_EQ(r.redactions.size(), 4u) << text;
    EXPECT_TRUE(redactor.Redact(r.text).redactions.empty()) << r.text;
    for (const std::string& s : pii) {
      EXPECT_EQ(r.text.find(s), std::string::npos);
    }
  }
}

TEST(PiiTest, ExtraCategories) {
  const PiiRedactor redactor(
      {{"postal", R"(〒\d{3}-\d{4})", "[POSTAL]"}});
  const RedactionResult r = redactor.Redact("住所 〒100-0001 東京都");
  EXPECT_EQ(r.text, "住所 [POSTAL] 東京都");
  EXPECT_EQ(r.counts.at("postal"), 1);
  EXPECT_EQ(redactor.category_names(),
            (std::vector<std::string>{"email", "phone", "postal"}));
}

TEST(PiiTest, RejectsBadCategories) {
  EXPECT_THROW(PiiRedactor({{"bad", "([", "[X]"}}), ConfigError);
  EXPECT_THROW(PiiRedactor({{"email", "x", "[X]"}}), ConfigError);
  EXPECT_THROW(PiiRedactor({{"", "x", "[X]"}}), ConfigError);
}

TEST(PiiTest, ApplyReportsCounts) {
  auto [doc, outcome] =
      PiiRedactor().Apply({"d", "mail a@example.com", {}, std::nullopt});
  EXPECT_EQ(doc.text, "mail [EMAIL]");
  EXPECT_EQ(outcome.verdict, Verdict::kModified);
  EXPECT_EQ(outcome.detail.at("email"), "1");
  auto [clean, kept] = PiiRedactor().Apply({"d", "clean", {}, std::nullopt});
  EXPECT_EQ(kept.verdict, Verdict::kKept);
}

}  // namespace
}  // namespace kotoba::corpus
