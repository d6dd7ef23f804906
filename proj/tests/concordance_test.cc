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

#include "textlens/concordance.h"

#include <memory>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "concordance_oracle.h"
#include "textlens/csv.h"
#include "textlens/error.h"

namespace textlens {
namespace {

using Strings = std::vector<std::string>;

class ConcordanceTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    auto dict = std::make_shared<const SegmenterDictionary>(
        SegmenterDictionary::load(std::string(TEXTLENS_DATA_DIR) +
                                  "/vi/dictionary.txt"));
    segmenter_ = new Segmenter(SegmenterKind::kMaxMatch, dict);
  }
  static void TearDownTestSuite() { delete segmenter_; }

  static SegmentedCorpus corpus(const std::vector<std::string>& texts,
                                Language lang = Language::kVietnamese) {
    std::vector<Document> docs;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      Document d;
      d.id = "doc-" + std::to_string(i + 1);
      d.raw_text = texts[i];
      d.language = lang;
      docs.push_back(d);
    }
    return SegmentedCorpus::build(docs, *segmenter_, WordList(), WordList());
  }

  static Segmenter* segmenter_;
};

Segmenter* ConcordanceTest::segmenter_ = nullptr;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no textlens::Error thrown";
  return ErrorCode::kInvalidInput;
}

TEST_F(ConcordanceTest, KwicWindowExample) {
  const auto lines = kwic(corpus({"tôi học ở trường"}), "học", 2);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].doc_id, "doc-1");
  EXPECT_EQ(lines[0].left, Strings{"tôi"});
  EXPECT_EQ(lines[0].node, Strings{"học"});
  EXPECT_EQ(lines[0].right, (Strings{"ở", "trường"}));
  EXPECT_EQ(lines[0].char_span, (Span{4, 7}));
}

TEST_F(ConcordanceTest, WholeTokenMatchingOnly) {
  EXPECT_TRUE(kwic(corpus({"học sinh"}), "học", 5).empty());
  EXPECT_EQ(kwic(corpus({"học sinh"}), "học sinh", 5).size(), 1u);
}

TEST_F(ConcordanceTest, WindowZero) {
  const auto lines = kwic(corpus({"tôi học ở trường"}), "học", 0);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].left.empty());
  EXPECT_TRUE(lines[0].right.empty());
}

TEST_F(ConcordanceTest, MultiTokenQueryAcrossTokens) {
  // "yêu học" is not a dictionary word, so it spans two tokens.
  const auto c = corpus({"tôi yêu học tập. Tôi yêu học."});
  const auto lines = kwic(c, "yêu  học", 1);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].node, (Strings{"yêu", "học"}));
  EXPECT_EQ(lines[0].right, Strings{"."});
  EXPECT_EQ(kwic(c, "yêu học tập", 0).size(), 1u);
}

TEST_F(ConcordanceTest, CaseSensitivity) {
  const auto c = corpus({"Good food. good mood."}, Language::kEnglish);
  EXPECT_EQ(kwic(c, "good", 3).size(), 2u);
  EXPECT_EQ(kwic(c, "good", 3, true).size(), 1u);
  EXPECT_EQ(kwic(c, "Good", 3, true)[0].char_span, (Span{0, 4}));
}

TEST_F(ConcordanceTest, ContextsStopAtDocumentEdges) {
  const auto lines = kwic(corpus({"a b", "c d"}, Language::kEnglish), "b", 5);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].left, Strings{"a"});
  EXPECT_TRUE(lines[0].right.empty());
}

TEST_F(ConcordanceTest, EmptyQueryRejected) {
  EXPECT_EQ(code_of([] { kwic(corpus({"a"}), "  ", 1); }),
            ErrorCode::kInvalidInput);
}

TEST_F(ConcordanceTest, CsvExport) {
  EXPECT_EQ(export_concordance_csv({}), "doc_id,left,node,right,start,end\n");
  const auto lines =
      kwic(corpus({"x, good, y"}, Language::kEnglish), "good", 2);
  const std::string out = export_concordance_csv(lines);
  EXPECT_EQ(out,
            "doc_id,left,node,right,start,end\n"
            "doc-1,\"x ,\",good,\", y\",3,7\n");
  EXPECT_EQ(csv::parse(out).size(), 2u);
}

TEST_F(ConcordanceTest, JsonExport) {
  const auto lines = kwic(corpus({"a b c"}, Language::kEnglish), "b", 1);
  EXPECT_EQ(export_concordance_json(lines),
            "{\"lines\":[{\"doc_id\":\"doc-1\",\"left\":[\"a\"],\"node\":\"b\","
            "\"right\":[\"c\"],\"start\":2,\"end\":3}]}");
}

TEST_F(ConcordanceTest, TreeIdenticalContextsMerge) {
  const auto c = corpus({"a b c. A b c."}, Language::kEnglish);
  WordTreeOptions o;
  o.max_depth = 2;
  const WordTreeNode expected{
      "a", 2, {{"b", 2, {{"c", 2, {}}}}}};
  EXPECT_EQ(WordTree::build(c, "a", o).root(), expected);
}

TEST_F(ConcordanceTest, TreeBranchesAndPruning) {
  const auto c = corpus({"a c. A b."}, Language::kEnglish);
  WordTreeOptions o;
  o.max_depth = 1;
  EXPECT_EQ(WordTree::build(c, "a", o).root(),
            (WordTreeNode{"a", 2, {{"b", 1, {}}, {"c", 1, {}}}}));
  o.min_branch_count = 2;
  EXPECT_EQ(WordTree::build(c, "a", o).root(), (WordTreeNode{"a", 2, {}}));
}

TEST_F(ConcordanceTest, TreeStopsAtSentenceBoundary) {
  const auto c = corpus({"x a. Next a y"}, Language::kEnglish);
  WordTreeOptions o;
  o.max_depth = 4;
  EXPECT_EQ(WordTree::build(c, "a", o).root(),
            (WordTreeNode{"a", 2, {{".", 1, {}}, {"y", 1, {}}}}));
  o.direction = TreeDirection::kLeft;
  EXPECT_EQ(WordTree::build(c, "a", o).root(),
            (WordTreeNode{"a", 2, {{"next", 1, {}}, {"x", 1, {}}}}));
}

TEST_F(ConcordanceTest, TreeErrors) {
  const auto c = corpus({"a b"}, Language::kEnglish);
  EXPECT_EQ(code_of([&] { WordTree::build(c, "zzz"); }),
            ErrorCode::kQueryNotFound);
  WordTreeOptions o;
  o.max_depth = 0;
  EXPECT_EQ(code_of([&] { WordTree::build(c, "a", o); }),
            ErrorCode::kInvalidInput);
  const WordTree t = WordTree::build(c, "a");
  EXPECT_EQ(code_of([&] { t.expand({"q"}, 1); }), ErrorCode::kPathNotFound);
}

TEST_F(ConcordanceTest, ExpandRootMatchesDeeperBuild) {
  const auto c = corpus({"a b x. A c y. A b z."}, Language::kEnglish);
  WordTreeOptions o;
  o.max_depth = 1;
  const WordTree shallow = WordTree::build(c, "a", o);
  o.max_depth = 2;
  EXPECT_EQ(shallow.expand({}, 1), WordTree::build(c, "a", o).root());
  const WordTreeNode b = shallow.expand({"B"}, 1);
  EXPECT_EQ(b, (WordTreeNode{"b", 2, {{"x", 1, {}}, {"z", 1, {}}}}));
  EXPECT_EQ(b.count, shallow.root().children[0].count);
}

TEST_F(ConcordanceTest, ExpandLeafAtSentenceEnd) {
  const auto c = corpus({"a b"}, Language::kEnglish);
  const WordTree t = WordTree::build(c, "a");
  EXPECT_EQ(t.expand({"b"}, 3), (WordTreeNode{"b", 1, {}}));
}

TEST_F(ConcordanceTest, WordTreeJson) {
  const auto c = corpus({"a b"}, Language::kEnglish);
  EXPECT_EQ(export_word_tree_json(WordTree::build(c, "a").root()),
            "{\"token\":\"a\",\"count\":1,\"children\":[{\"token\":\"b\","
            "\"count\":1,\"children\":[]}]}");
}

TEST_F(ConcordanceTest, ConcurrentFirstQueries) {
  const auto c = corpus({"a b a c a d"}, Language::kEnglish);
  std::vector<std::thread> threads;
  std::vector<std::size_t> counts(8);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    threads.emplace_back([&, i] { counts[i] = kwic(c, "a", 1).size(); });
  }
  for (auto& t : threads) t.join();
  for (std::size_t n : counts) EXPECT_EQ(n, 3u);
}

void collect(const WordTreeNode& n, oracle::Path& path,
             std::map<oracle::Path, std::size_t>& out) {
  for (const auto& c : n.children) {
    path.push_back(c.token);
    out[path] = c.count;
    collect(c, path, out);
    path.pop_back();
  }
}

TEST_F(ConcordanceTest, TreeConservationAgainstOracle) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::RandomCorpus rc = oracle::random_corpus(rng);
    const auto c = corpus(rc.texts, Language::kEnglish);
    const std::string query(1, static_cast<char>('a' + rng() % 5));
    const std::size_t matches = oracle::count_matches(rc.docs, query);
    ASSERT_EQ(kwic(c, query, 3).size(), matches);
    if (matches == 0) continue;
    ++checked;
    WordTreeOptions o;
    o.direction = rng() % 2 ? TreeDirection::kRight : TreeDirection::kLeft;
    o.max_depth = 1 + rng() % 4;
    o.min_branch_count = 1 + rng() % 2;
    const WordTree tree = WordTree::build(c, query, o);
    EXPECT_EQ(tree.root().count, matches);
    std::map<oracle::Path, std::size_t> got;
    oracle::Path path;
    collect(tree.root(), path, got);
    const auto want = oracle::surviving(
        oracle::prefix_counts(rc.docs, query,
                              o.direction == TreeDirection::kRight,
                              o.max_depth),
        o.min_branch_count);
    EXPECT_EQ(got, want);
  }
  EXPECT_GT(checked, 100);
}

TEST_F(ConcordanceTest, WindowTruncationConsistency) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::RandomCorpus rc = oracle::random_corpus(rng);
    const auto c = corpus(rc.texts, Language::kEnglish);
    const std::string query(1, static_cast<char>('a' + rng() % 5));
    const std::size_t w = rng() % 6;
    auto wide = kwic(c, query, w + 1);
    const auto narrow = kwic(c, query, w);
    ASSERT_EQ(wide.size(), narrow.size());
    for (auto& l : wide) {
      if (l.left.size() > w) l.left.erase(l.left.begin());
      if (l.right.size() > w) l.right.pop_back();
    }
    EXPECT_EQ(export_concordance_csv(wide), export_concordance_csv(narrow));
  }
}

}  // namespace
}  // namespace textlens
