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

// TextRank sentence extraction.

#ifndef TEXTLENS_TEXTRANK_H_
#define TEXTLENS_TEXTRANK_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textlens/ingest.h"
#include "textlens/segment.h"
#include "textlens/text.h"

namespace textlens {

using WeightMatrix = std::vector<std::vector<double>>;

struct TextRankOptions {
  double damping = 0.85;
  double epsilon = 1e-4;
  int max_iterations = 200;
};

// Word tokens of `text`, case-folded, minus stopwords. Multi-syllable
// tokens stay whole.
std::vector<std::string> content_words(const SegmentedText& text,
                                       const WordList& stopwords);

// |distinct shared words| / (ln|s1| + ln|s2|), where |s| counts tokens with
// repetition. 0 when either side has at most one token.
double sentence_similarity(const std::vector<std::string>& s1,
                           const std::vector<std::string>& s2);

// Symmetric, zero diagonal.
WeightMatrix similarity_matrix(
    const std::vector<std::vector<std::string>>& sentences);

struct TextRankResult {
  std::vector<double> scores;
  int iterations = 0;
  bool converged = false;
};

// Synchronous updates from all-ones until the largest per-node change is
// below epsilon or max_iterations passes have run. A node with no outgoing
// weight contributes nothing to its neighbours. Throws kInvalidInput for an
// empty, non-square or negative matrix.
TextRankResult textrank_scores(const WeightMatrix& weights,
                               const TextRankOptions& options = {});

// A fraction in (0, 1] rounds up; a count is capped at the sentence total.
// Either way at least one sentence is selected.
struct SummaryTarget {
  enum class Kind { kFraction, kCount };
  Kind kind = Kind::kFraction;
  double value = 0.3;

  static SummaryTarget fraction(double f) { return {Kind::kFraction, f}; }
  static SummaryTarget count(std::size_t n) {
    return {Kind::kCount, static_cast<double>(n)};
  }
  // "30%", "0.3" or "3". Throws kInvalidInput.
  static SummaryTarget parse(std::string_view text);

  std::size_t resolve(std::size_t sentence_count) const;
};

struct SelectedSentence {
  std::size_t index = 0;
  double score = 0.0;
  std::string text;
};

struct ExtractiveSummary {
  std::vector<SelectedSentence> selected;  // document order
  int iterations = 0;
};

// Ranks pre-split sentences given their content words. Ties go to the
// earlier sentence. Throws kEmptyInput for zero sentences.
ExtractiveSummary summarise_sentences(
    const std::vector<std::string>& sentences,
    const std::vector<std::vector<std::string>>& content,
    const SummaryTarget& target, const TextRankOptions& options = {});

// Splits, segments each sentence in `language` and ranks.
ExtractiveSummary summarise_extractive(std::string_view text,
                                       Language language,
                                       const SummaryTarget& target,
                                       const Segmenter& segmenter,
                                       const WordList& stopwords,
                                       const WordList& abbreviations,
                                       const TextRankOptions& options = {});

// Sentences never cross document boundaries. Indices run over the
// concatenated sentence list. Every document is segmented in `language`.
ExtractiveSummary summarise_documents(std::span<const Document> documents,
                                      Language language,
                                      const SummaryTarget& target,
                                      const Segmenter& segmenter,
                                      const WordList& stopwords,
                                      const WordList& abbreviations,
                                      const TextRankOptions& options = {});

// {"summary":[{"index","score","text"}],"method":"textrank"}
std::string export_summary_json(const ExtractiveSummary& summary);

}  // namespace textlens

#endif  // TEXTLENS_TEXTRANK_H_
