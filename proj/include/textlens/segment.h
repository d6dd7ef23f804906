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

// Word segmentation.
//
// Vietnamese text is segmented by greedy longest match over syllables against
// a dictionary of multi-syllable words. A syllable is a maximal run of
// letters (combining marks included); digit runs and single punctuation
// characters become non-word tokens. Only whitespace may separate the
// syllables of one dictionary word.
//
// English text is split on whitespace, with leading and trailing
// punctuation detached from each chunk.
//
// Every token carries its span in code points and bytes. Tokens never
// overlap and appear in source order, so the source can be rebuilt from the
// spans plus the characters between them.

#ifndef TEXTLENS_SEGMENT_H_
#define TEXTLENS_SEGMENT_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "textlens/bpe.h"
#include "textlens/text.h"

namespace textlens {

class SegmenterDictionary {
 public:
  SegmenterDictionary() = default;
  // Entries are NFC-normalised and case-folded; internal whitespace collapses
  // to one space. Throws kInvalidInput for entries outside 2..4 syllables.
  explicit SegmenterDictionary(const std::vector<std::string>& entries);

  // One entry per line, '#' comments and single-syllable lines ignored.
  static SegmenterDictionary parse(std::string_view text);
  static SegmenterDictionary load(const std::filesystem::path& path);

  // `key` is folded syllables joined by single spaces.
  bool contains(std::string_view key) const {
    return entries_.find(std::string(key)) != entries_.end();
  }
  std::size_t max_word_syllables() const { return max_word_syllables_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::vector<std::string> sorted_entries() const;

 private:
  std::unordered_set<std::string> entries_;
  std::size_t max_word_syllables_ = 0;
};

SegmentedText segment_vietnamese(std::string_view text,
                                 const SegmenterDictionary& dict);

SegmentedText tokenize_english(std::string_view text);

// Word-level segmentation followed by BPE subwords on every word token. The
// subwords of a Vietnamese token encode its surface with spaces removed.
SegmentedText segment_hybrid(std::string_view text, Language language,
                             const SegmenterDictionary& dict,
                             const BpeModel& model);

// The strings the hybrid layer encodes: word token surfaces without spaces.
std::vector<std::string> bpe_training_words(const SegmentedText& segmented);

// One token per line: "surface<TAB>begin<TAB>end<TAB>subwords", code point
// spans, subwords space-separated and empty when absent.
std::string export_segmentation_tsv(const SegmentedText& segmented);

struct Sentence {
  std::string text;
  Span span;       // code points
  Span byte_span;  // bytes
};

// Splits after a run of . ! ? or … (plus closing quotes and brackets) that is
// followed by whitespace and an uppercase letter, or by the end of the text.
// A run whose preceding whitespace-delimited chunk is in `abbreviations`
// does not split. Leading and trailing whitespace is excluded from spans.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const WordList& abbreviations);

struct SegmentationScore {
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
  double precision = 0.0;  // fractions in [0, 1]
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision, recall and F1 from raw span-set counts. Empty against empty
// scores 1.0 throughout.
SegmentationScore make_score(std::size_t matched, std::size_t predicted,
                             std::size_t gold);

// Aligns `gold` words against `source`. A space inside a gold word matches
// any non-empty whitespace run; whitespace between words is optional.
// Throws kSpanMismatch if the words do not tile the source.
std::vector<Span> gold_spans(std::string_view source,
                             const std::vector<std::string>& gold);

// Compares token spans with gold word spans over the same source.
SegmentationScore score_segmentation_f1(const SegmentedText& predicted,
                                        const std::vector<std::string>& gold,
                                        std::string_view source);

enum class SegmenterKind { kMaxMatch, kHybrid, kWhitespace };

std::string_view segmenter_kind_name(SegmenterKind kind);
SegmenterKind parse_segmenter_kind(std::string_view name);

// Bundles the resources of one segmentation strategy. kWhitespace applies
// maximum matching with an empty dictionary, so punctuation is still
// detached. Unknown language routes to the English tokenizer.
class Segmenter {
 public:
  Segmenter(SegmenterKind kind,
            std::shared_ptr<const SegmenterDictionary> dictionary,
            std::shared_ptr<const BpeModel> vietnamese_bpe = nullptr,
            std::shared_ptr<const BpeModel> english_bpe = nullptr);

  SegmentedText segment(std::string_view text, Language language) const;
  SegmenterKind kind() const { return kind_; }

 private:
  SegmenterKind kind_;
  std::shared_ptr<const SegmenterDictionary> dictionary_;
  std::shared_ptr<const BpeModel> vietnamese_bpe_;
  std::shared_ptr<const BpeModel> english_bpe_;
};

}  // namespace textlens

#endif  // TEXTLENS_SEGMENT_H_
