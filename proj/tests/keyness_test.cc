// Copyright 2026 The textlens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "textlens/keyness.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ll_oracle.h"
#include "textlens/error.h"
#include "textlens/segment.h"

namespace textlens {
namespace {

SegmentedText words(std::vector<std::string> surfaces,
                    Language language = Language::kEnglish) {
  SegmentedText s;
  s.language = language;
  for (auto& w : surfaces) {
    Token t;
    t.surface = std::move(w);
    s.tokens.push_back(std::move(t));
  }
  return s;
}

ReferenceCorpus reference(std::map<std::string, std::int64_t> counts,
                          std::int64_t total) {
  ReferenceCorpus ref;
  ref.name = "test";
  ref.total = total;
  for (auto& [t, c] : counts) ref.counts[t] = c;
  return ref;
}

FrequencyTable table(std::map<std::string, std::int64_t> counts) {
  FrequencyTable t;
  t.language = Language::kEnglish;
  for (auto& [term, c] : counts) {
    t.counts[term] = c;
    t.total += c;
  }
  return t;
}

TEST(FrequencyTableTest, CountsWordTokens) {
  std::vector<SegmentedText> texts = {words({"a", "B", "a"})};
  auto t = build_frequency_table(texts);
  EXPECT_EQ(t.counts, (std::map<std::string, std::int64_t>{{"a", 2}, {"b", 1}}));
  EXPECT_EQ(t.total, 3);
}

TEST(FrequencyTableTest, Stopwords) {
  std::vector<SegmentedText> texts = {words({"a", "b", "a"})};
  WordList stop({"a"});
  auto t = build_frequency_table(texts, &stop);
  EXPECT_EQ(t.counts, (std::map<std::string, std::int64_t>{{"b", 1}}));
  EXPECT_EQ(t.total, 1);
}

TEST(FrequencyTableTest, VietnameseWordIsOneTerm) {
  SegmenterDictionary dict({"học sinh"});
  std::vector<SegmentedText> texts = {segment_vietnamese("Học sinh học.", dict)};
  auto t = build_frequency_table(texts);
  EXPECT_EQ(t.counts.at("học sinh"), 1);
  EXPECT_EQ(t.counts.at("học"), 1);
  EXPECT_EQ(t.total, 2);
}

TEST(FrequencyTableTest, MixedLanguageRejected) {
  std::vector<SegmentedText> texts = {words({"a"}),
                                      words({"b"}, Language::kVietnamese)};
  try {
    build_frequency_table(texts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedLanguage);
  }
}

TEST(LogLikelihoodTest, EqualRatesGiveZero) {
  auto r = log_likelihood(10, 10, 1000, 1000);
  EXPECT_DOUBLE_EQ(r.e1, 10.0);
  EXPECT_DOUBLE_EQ(r.e2, 10.0);
  EXPECT_EQ(r.ll, 0.0);
}

TEST(LogLikelihoodTest, AbsentFromReference) {
  auto r = log_likelihood(10, 0, 1000, 1000);
  EXPECT_DOUBLE_EQ(r.e1, 5.0);
  EXPECT_DOUBLE_EQ(r.e2, 5.0);
  EXPECT_NEAR(r.ll, 13.8629, 1e-4);
  EXPECT_NEAR(r.ll, 20.0 * std::log(2.0), 1e-12);
}

TEST(LogLikelihoodTest, Symmetry) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t n1 = 1 + rng() % 5000;
    const std::int64_t n2 = 1 + rng() % 5000;
    const std::int64_t a = rng() % (n1 + 1);
    std::int64_t b = rng() % (n2 + 1);
    if (a + b == 0) b = 1;
    EXPECT_NEAR(log_likelihood(a, b, n1, n2).ll,
                log_likelihood(b, a, n2, n1).ll, 1e-9);
  }
}

TEST(LogLikelihoodTest, AgreesWithContingencyOracle) {
  for (std::int64_t a = 0; a <= 50; ++a) {
    for (std::int64_t b = 0; b <= 50; ++b) {
      if (a + b == 0) continue;
      for (auto [n1, n2] : {std::pair<std::int64_t, std::int64_t>{50, 50},
                            {73, 120},
                            {1000, 1000}}) {
        const auto expected = oracle::log_likelihood(a, b, n1, n2);
        const auto got = log_likelihood(a, b, n1, n2);
        EXPECT_NEAR(got.ll, expected.ll, 1e-9);
        EXPECT_NEAR(got.e1, expected.e1, 1e-9);
        EXPECT_NEAR(got.e2, expected.e2, 1e-9);
      }
    }
  }
}

TEST(LogLikelihoodTest, ZeroExactlyForProportionalTables) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t k = 1 + rng() % 50;
    const std::int64_t n2 = 1 + rng() % 10000;
    const std::int64_t b = 1 + rng() % n2;
    EXPECT_EQ(log_likelihood(k * b, b, k * n2, n2).ll, 0.0);
    if (b < n2) EXPECT_GT(log_likelihood(k * b + 1, b, k * n2, n2).ll, 0.0);
  }
}

TEST(LogLikelihoodTest, PreconditionsEnforced) {
  EXPECT_THROW(log_likelihood(0, 0, 10, 10), Error);
  EXPECT_THROW(log_likelihood(11, 0, 10, 10), Error);
  EXPECT_THROW(log_likelihood(1, 0, 0, 10), Error);
  EXPECT_THROW(log_likelihood(-1, 2, 10, 10), Error);
}

TEST(KeynessTableTest, ProportionalStudyHasZeroLl) {
  auto ref = reference({{"x", 10}, {"y", 30}, {"z", 60}}, 100);
  auto study = table({{"x", 30}, {"y", 90}, {"z", 180}});
  for (const auto& row : keyness_table(study, ref)) {
    EXPECT_EQ(row.ll, 0.0);
    EXPECT_EQ(row.signed_keyness, 0.0);
    EXPECT_DOUBLE_EQ(row.pct_diff, 0.0);
  }
}

TEST(KeynessTableTest, PctDiffHandArithmetic) {
  auto ref = reference({{"x", 1}}, 1000);
  FrequencyTable study = table({{"x", 10}});
  study.total = 100;
  auto rows = keyness_table(study, ref);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].pct_diff, 9900.0, 1e-9);
  EXPECT_GT(rows[0].signed_keyness, 0.0);
}

TEST(KeynessTableTest, AbsentTermSmoothed) {
  auto ref = reference({{"x", 5}}, 1000);
  auto rows = keyness_table(table({{"new", 3}, {"x", 2}}), ref);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].term, "new");
  EXPECT_EQ(rows[0].b, 0);
  EXPECT_TRUE(std::isfinite(rows[0].pct_diff));
  EXPECT_NEAR(rows[0].pct_diff, 100.0 * (0.6 - 1e-12) / 1e-12, 1e3);
}

TEST(KeynessTableTest, SignMatchesRateDifference) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, std::int64_t> s, r;
    for (int t = 0; t < 10; ++t) {
      s["t" + std::to_string(t)] = rng() % 20;
      r["t" + std::to_string(t)] = rng() % 20;
    }
    auto study = table(s);
    if (study.total == 0) continue;
    auto ref = reference(r, 200);
    for (const auto& row : keyness_table(study, ref, 1)) {
      const double diff = static_cast<double>(row.a) / study.total -
                          static_cast<double>(row.b) / ref.total;
      if (row.a * ref.total == row.b * study.total) {
        EXPECT_EQ(row.signed_keyness, 0.0);
      } else {
        EXPECT_EQ(row.signed_keyness > 0, diff > 0);
      }
      EXPECT_GE(row.ll, 0.0);
    }
  }
}

TEST(KeynessTableTest, OrderIsTotalAndDeterministic) {
  auto ref = reference({{"a", 1}, {"b", 1}}, 1000);
  auto rows = keyness_table(table({{"b", 3}, {"a", 3}, {"c", 1}}), ref);
  ASSERT_EQ(rows.size(), 2u);  // min_count 2 drops c
  EXPECT_EQ(rows[0].term, "a");
  EXPECT_EQ(rows[1].term, "b");
}

TEST(KeynessTableTest, EmptyTotalsRejected) {
  EXPECT_THROW(keyness_table(FrequencyTable{}, reference({}, 10)), Error);
  EXPECT_THROW(keyness_table(table({{"a", 2}}), reference({}, 0)), Error);
}

TEST(WordCloudTest, FrequencyMaxNormalised) {
  auto entries = wordcloud_payload(CloudMode::kFrequency,
                                   table({{"a", 4}, {"b", 2}}), nullptr, {});
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].term, "a");
  EXPECT_DOUBLE_EQ(entries[0].weight, 1.0);
  EXPECT_EQ(entries[1].term, "b");
  EXPECT_DOUBLE_EQ(entries[1].weight, 0.5);
}

TEST(WordCloudTest, ProportionalStudyGivesEmptyLlCloud) {
  auto ref = reference({{"x", 10}, {"y", 30}}, 40);
  auto entries = wordcloud_payload(CloudMode::kLogLikelihood,
                                   table({{"x", 20}, {"y", 60}}), &ref, {});
  EXPECT_TRUE(entries.empty());
}

TEST(WordCloudTest, TopKOne) {
  auto ref = reference({{"x", 1}}, 1000);
  CloudOptions options;
  options.top_k = 1;
  for (auto mode :
       {CloudMode::kFrequency, CloudMode::kLogLikelihood, CloudMode::kKeyness}) {
    auto entries = wordcloud_payload(
        mode, table({{"x", 5}, {"y", 7}, {"z", 2}}), &ref, options);
    EXPECT_EQ(entries.size(), 1u);
    EXPECT_DOUBLE_EQ(entries[0].weight, 1.0);
  }
}

TEST(WordCloudTest, KeynessCarriesPctDiff) {
  auto ref = reference({{"x", 1}}, 1000);
  auto entries = wordcloud_payload(CloudMode::kKeyness,
                                   table({{"x", 5}, {"y", 7}}), &ref, {});
  ASSERT_FALSE(entries.empty());
  for (const auto& e : entries) EXPECT_TRUE(e.pct_diff.has_value());
}

TEST(WordCloudTest, ReferenceModesNeedReference) {
  EXPECT_THROW(wordcloud_payload(CloudMode::kKeyness, table({{"x", 3}}),
                                 nullptr, {}),
               Error);
}

TEST(WordCloudTest, WeightsMonotoneInStatistic) {
  std::mt19937 rng(31);
  auto ref = reference({{"t0", 3}, {"t1", 5}, {"t2", 1}}, 5000);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, std::int64_t> s;
    for (int t = 0; t < 8; ++t) s["t" + std::to_string(t)] = 1 + rng() % 30;
    for (auto mode : {CloudMode::kFrequency, CloudMode::kLogLikelihood,
                      CloudMode::kKeyness}) {
      CloudOptions options;
      options.top_k = 100;
      auto entries = wordcloud_payload(mode, table(s), &ref, options);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        EXPECT_GT(entries[i].weight, 0.0);
        EXPECT_LE(entries[i].weight, 1.0);
        for (std::size_t j = 0; j < entries.size(); ++j) {
          if (entries[i].statistic > entries[j].statistic) {
            EXPECT_GE(entries[i].weight, entries[j].weight);
          }
        }
      }
    }
  }
}

TEST(WordCloudTest, StopwordsExcluded) {
  WordList stop({"the"});
  CloudOptions options;
  options.stopwords = &stop;
  auto entries = wordcloud_payload(CloudMode::kFrequency,
                                   table({{"the", 9}, {"cat", 2}}), nullptr,
                                   options);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].term, "cat");
}

TEST(WordCloudTest, CsvAndJsonExport) {
  auto entries = wordcloud_payload(CloudMode::kFrequency,
                                   table({{"a,b", 4}, {"c", 2}}), nullptr, {});
  EXPECT_EQ(export_cloud_csv(entries),
            "term,weight,statistic,count_study,count_reference\n"
            "\"a,b\",1,4,4,0\nc,0.5,2,2,0\n");
  EXPECT_EQ(export_cloud_json({}), "[]");
  EXPECT_EQ(export_cloud_json(entries),
            "[{\"term\":\"a,b\",\"weight\":1.0,\"statistic\":4.0,"
            "\"count_study\":4,\"count_reference\":0},"
            "{\"term\":\"c\",\"weight\":0.5,\"statistic\":2.0,"
            "\"count_study\":2,\"count_reference\":0}]");
}

TEST(ReferenceCorpusTest, ParseAndValidate) {
  auto ref = parse_reference_corpus(
      "refcorpus-v1 tiny 100\nThe\t40\nof\t20\n");
  EXPECT_EQ(ref.name, "tiny");
  EXPECT_EQ(ref.total, 100);
  EXPECT_EQ(ref.count("the"), 40);
  EXPECT_EQ(ref.count("missing"), 0);
  EXPECT_THROW(parse_reference_corpus("refcorpus-v2 x 1\n"), Error);
  EXPECT_THROW(parse_reference_corpus("refcorpus-v1 x 10\na\t20\n"), Error);
  EXPECT_THROW(parse_reference_corpus("refcorpus-v1 x 10\na 2\n"), Error);
}

TEST(ReferenceCorpusTest, BundledListsLoad) {
  for (const char* lang : {"en", "vi"}) {
    auto ref = load_reference_corpus(std::string(TEXTLENS_DATA_DIR) + "/" +
                                     lang + "/reference.txt");
    EXPECT_GE(ref.counts.size(), 4900u) << lang;
    EXPECT_GT(ref.total, 0);
  }
}

}  // namespace
}  // namespace textlens
