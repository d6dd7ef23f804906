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

#include "textlens/ingest.h"

#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "textlens/csv.h"
#include "textlens/error.h"

namespace textlens {
namespace {

const std::string kDataDir = TEXTLENS_DATA_DIR;

LanguageDetector bundled_detector() {
  return LanguageDetector(WordList::load(kDataDir + "/vi/stopwords.txt"),
                          WordList::load(kDataDir + "/en/stopwords.txt"));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kNotFound;
}

TEST(LoadPlainTextTest, NormalisesLineEndings) {
  auto doc = load_plain_text("hello world\r\nsecond\rthird");
  EXPECT_EQ(doc.raw_text, "hello world\nsecond\nthird");
  EXPECT_EQ(doc.language, Language::kUnknown);
  EXPECT_EQ(doc.source, Source::kPlainTextFile);
}

TEST(LoadPlainTextTest, EmptyInput) {
  EXPECT_EQ(load_plain_text("").raw_text, "");
}

TEST(LoadPlainTextTest, InvalidUtf8) {
  EXPECT_EQ(code_of([] { load_plain_text("\xFF\xFE\x00"); }),
            ErrorCode::kDecodeError);
}

TEST(LoadPlainTextTest, StripsBomAndComposes) {
  // "e" + combining circumflex + combining acute composes to U+1EBF.
  auto doc = load_plain_text("\xEF\xBB\xBFk\x65\xCC\x82\xCC\x81");
  EXPECT_EQ(doc.raw_text, "k\xE1\xBA\xBF");
}

TEST(LoadPlainTextTest, RoundTripsAnyNfcText) {
  std::mt19937 rng(5);
  const std::vector<std::string> pieces = {"a", "ế", "\n", " ", "ư", "Z",
                                           "😀", ",", "đ"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int n = 0; n < 30; ++n) text += pieces[pick(rng)];
    EXPECT_EQ(load_plain_text(text).raw_text, text);
  }
}

TEST(LoadCsvTest, SkipsEmptyCells) {
  auto docs = load_csv("id,feedback\n1,great\n2,\n", "feedback");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].raw_text, "great");
  EXPECT_EQ(docs[0].column_label, "feedback");
  EXPECT_EQ(docs[0].source, Source::kCsvCell);
}

TEST(LoadCsvTest, PreservesRowOrder) {
  auto docs = load_csv("id,text\r\n1,one\r\n2,\"two, quoted\"\r\n3,three\r\n",
                       "text");
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].raw_text, "one");
  EXPECT_EQ(docs[1].raw_text, "two, quoted");
  EXPECT_EQ(docs[2].raw_text, "three");
}

TEST(LoadCsvTest, ColumnByIndex) {
  auto docs = load_csv("id,text\n1,one\n", "#1");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].raw_text, "one");
}

TEST(LoadCsvTest, Errors) {
  EXPECT_EQ(code_of([] { load_csv("id,feedback\n1,x\n", "comments"); }),
            ErrorCode::kColumnNotFound);
  EXPECT_EQ(code_of([] { load_csv("id,feedback\n1,\"x\n", "feedback"); }),
            ErrorCode::kCsvParseError);
  EXPECT_EQ(code_of([] { load_csv("id,feedback\n1,a\"b\n", "feedback"); }),
            ErrorCode::kCsvParseError);
  EXPECT_EQ(code_of([] { load_csv("id,feedback\n1,\"a\"b\n", "feedback"); }),
            ErrorCode::kCsvParseError);
}

TEST(LoadCsvTest, CountsNonEmptyCells) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::string csv = "id,text\n";
    std::size_t expected = 0;
    const int rows = static_cast<int>(rng() % 20);
    for (int r = 0; r < rows; ++r) {
      const bool filled = rng() % 3 != 0;
      std::string cell = filled ? "v" + std::to_string(r) + ", \"q\"" : "";
      expected += filled;
      std::string line = std::to_string(r) + ",";
      line += csv::escape(cell);
      csv += line + "\n";
    }
    EXPECT_EQ(load_csv(csv, "text").size(), expected);
  }
}

TEST(CsvTest, EscapeRoundTrip) {
  std::string out;
  csv::append_row(out, {"a,b", "say \"hi\"", "line\nbreak", "plain"});
  auto rows = csv::parse(out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], (csv::Row{"a,b", "say \"hi\"", "line\nbreak", "plain"}));
}

TEST(DetectLanguageTest, Examples) {
  const auto detector = bundled_detector();
  EXPECT_EQ(detector.detect("học sinh đi học"), Language::kVietnamese);
  EXPECT_EQ(detector.detect("the students went to school"),
            Language::kEnglish);
  EXPECT_EQ(detector.detect("1234 !!"), Language::kUnknown);
  EXPECT_EQ(detector.detect(""), Language::kUnknown);
}

TEST(DetectLanguageTest, ScoresFollowTheRule) {
  const auto detector = bundled_detector();
  auto vi = detector.score("học sinh đi học");
  EXPECT_EQ(vi.english, 0u);
  EXPECT_GT(vi.vietnamese, 0u);
  auto en = detector.score("the students went to school");
  EXPECT_EQ(en.vietnamese, 0u);
  EXPECT_GE(en.english, 4u);
}

TEST(DetectLanguageTest, LettersWithoutEvidenceAreEnglish) {
  const auto detector = bundled_detector();
  EXPECT_EQ(detector.detect("xyzzy qwrt"), Language::kEnglish);
}

TEST(DetectLanguageTest, VietnameseCharactersWithoutEnglishStopwords) {
  const auto detector = bundled_detector();
  std::mt19937 rng(1);
  const std::vector<std::string> vi_chars = {"ă", "Đ", "ơ", "ữ", "Ế", "ỵ"};
  const std::vector<std::string> filler = {"x", "k", "q", "z", "7", " "};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = vi_chars[rng() % vi_chars.size()];
    for (int n = 0; n < 10; ++n) text += filler[rng() % filler.size()];
    EXPECT_EQ(detector.detect(text), Language::kVietnamese) << text;
    EXPECT_EQ(detector.detect(text), detector.detect(text));
  }
}

TEST(VietnameseCharsTest, Membership) {
  EXPECT_TRUE(is_vietnamese_specific(U'đ'));
  EXPECT_TRUE(is_vietnamese_specific(U'Ư'));
  EXPECT_TRUE(is_vietnamese_specific(U'ỹ'));
  EXPECT_TRUE(is_vietnamese_specific(U'Ậ'));
  EXPECT_FALSE(is_vietnamese_specific(U'a'));
  EXPECT_FALSE(is_vietnamese_specific(U'ç'));
}

Document doc(std::string text, Language language = Language::kEnglish) {
  Document d;
  d.raw_text = std::move(text);
  d.language = language;
  return d;
}

TEST(CorpusTest, SnapshotIsImmutable) {
  Corpus corpus;
  corpus.add(doc("one"));
  auto snap = corpus.snapshot();
  corpus.add(doc("two"));
  EXPECT_EQ(snap.size(), 1u);
  EXPECT_EQ(corpus.snapshot().size(), 2u);
  EXPECT_LT(snap.version(), corpus.snapshot().version());
}

TEST(CorpusTest, EmptySnapshot) {
  Corpus corpus;
  EXPECT_TRUE(corpus.snapshot().empty());
}

TEST(CorpusTest, SnapshotsOfSameStateAgree) {
  Corpus corpus;
  corpus.add_all({doc("a"), doc("b"), doc("c")});
  auto a = corpus.snapshot();
  auto b = corpus.snapshot();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id, b[i].id);
  EXPECT_EQ(a[0].id, "doc-1");
}

TEST(CorpusTest, DuplicateIdRejectedAtomically) {
  Corpus corpus;
  Document d = doc("x");
  d.id = "same";
  corpus.add(d);
  EXPECT_EQ(code_of([&] { corpus.add_all({doc("y"), d}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(corpus.size(), 1u);
}

TEST(CorpusTest, StatsCacheMatchesRecompute) {
  Corpus corpus;
  corpus.add(doc("a b c"));
  corpus.add(doc("học sinh", Language::kVietnamese));
  EXPECT_EQ(corpus.stats(), compute_stats(corpus.snapshot().documents()));
  EXPECT_EQ(corpus.stats().tokens.at(Language::kEnglish), 3u);
  corpus.add(doc("d e"));
  EXPECT_EQ(corpus.stats(), compute_stats(corpus.snapshot().documents()));
  EXPECT_EQ(corpus.stats().tokens.at(Language::kEnglish), 5u);
  EXPECT_EQ(corpus.total_bytes(), 5u + 10u + 3u);
}

TEST(CorpusTest, ConcurrentReadersAndWriters) {
  Corpus corpus;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 100; ++i) corpus.add(doc("w"));
    });
    threads.emplace_back([&] {
      for (int i = 0; i < 100; ++i) {
        auto snap = corpus.snapshot();
        EXPECT_EQ(compute_stats(snap.documents()).documents.size() <= 1, true);
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(corpus.size(), 400u);
}

TEST(ExportCorpusTest, FieldOrder) {
  Corpus corpus;
  Document d = doc("xin chào", Language::kVietnamese);
  d.source = Source::kDirectInput;
  corpus.add(d);
  EXPECT_EQ(export_corpus_json(corpus.snapshot()),
            "{\"documents\":[{\"id\":\"doc-1\",\"language\":\"vi\","
            "\"source\":\"direct_input\",\"text\":\"xin chào\"}]}");
}

}  // namespace
}  // namespace textlens
