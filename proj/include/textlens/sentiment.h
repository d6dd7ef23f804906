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

#ifndef TEXTLENS_SENTIMENT_H_
#define TEXTLENS_SENTIMENT_H_

#include <array>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textlens/ingest.h"
#include "textlens/segment.h"
#include "textlens/text.h"

namespace textlens {

// Terms are case-folded NFC. Vietnamese phrases keep one space between
// syllables so they match segmenter surfaces.
struct SentimentLexicon {
  std::unordered_map<std::string, double> polarity;
  std::unordered_set<std::string> negators;
  std::unordered_map<std::string, double> intensifiers;

  // Lines: term<TAB>polarity | NEG<TAB>term | INT<TAB>term<TAB>multiplier.
  // Throws kInvalidInput naming the line on malformed input, polarity
  // outside [-1, 1] or a non-positive multiplier.
  static SentimentLexicon parse(std::string_view text);
  static SentimentLexicon load(const std::filesystem::path& path);
};

// Ordered from most negative to most positive.
enum class Label5 { kVeryNegative, kNegative, kNeutral, kPositive, kVeryPositive };
enum class Label3 { kNegative, kNeutral, kPositive };

inline constexpr std::array<Label5, 5> kAllLabels5 = {
    Label5::kVeryNegative, Label5::kNegative, Label5::kNeutral,
    Label5::kPositive, Label5::kVeryPositive};
inline constexpr std::array<Label3, 3> kAllLabels3 = {
    Label3::kNegative, Label3::kNeutral, Label3::kPositive};

Label3 project(Label5 label);
// "very_negative" ... "very_positive".
std::string_view label_name(Label5 label);
std::string_view label_name(Label3 label);
// Throws kSchemaError for anything outside the five names.
Label5 parse_label5(std::string_view name);

// Four strictly ascending cut points c0 < c1 < c2 < c3.
struct Thresholds {
  std::array<double, 4> cuts = {-1.0, -0.25, 0.25, 1.0};

  // Throws kInvalidThresholds.
  void validate() const;
};

inline constexpr double kDefaultSaturation = 2.0;

struct Classification {
  Label5 label5 = Label5::kNeutral;
  Label3 label3 = Label3::kNeutral;
  double confidence = 0.0;
};

// Boundaries go to the more neutral interval.
Classification classify(double raw_score, const Thresholds& thresholds = {},
                        double saturation = kDefaultSaturation);

inline constexpr int kNegationWindow = 3;

// Sum of polarity hits over word tokens. A negator flips hits among the next
// kNegationWindow word tokens; an intensifier scales the next hit. Sentence
// terminators reset both.
double score_lexicon(const SegmentedText& tokens,
                     const SentimentLexicon& lexicon);

struct SentimentResult {
  std::string document_id;
  std::string unit_text;
  double raw_score = 0.0;
  Label5 label5 = Label5::kNeutral;
  Label3 label3 = Label3::kNeutral;
  double confidence = 0.0;
};

struct SentimentDistribution {
  std::map<Label5, std::size_t> counts;
  std::map<Label5, double> fractions;
  std::size_t total = 0;
};

// Always carries all five labels.
SentimentDistribution distribution(std::span<const SentimentResult> results);

struct ExternalClassifierOptions {
  std::string endpoint;  // http://host:port/path
  std::chrono::milliseconds timeout{30000};
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 4;
};

// POSTs {"texts":[...]} in batches and maps {"results":[{label,confidence}]}
// back in input order. Throws kBackendUnavailable on transport failure or a
// non-2xx status and kSchemaError on a malformed body. No partial results.
std::vector<SentimentResult> external_classify(
    const std::vector<std::string>& units,
    const ExternalClassifierOptions& options);

enum class Granularity { kPerSentence, kPerDocument };
enum class SentimentBackend { kLexicon, kExternal };

std::string_view granularity_name(Granularity granularity);
Granularity parse_granularity(std::string_view name);
std::string_view backend_name(SentimentBackend backend);
SentimentBackend parse_backend(std::string_view name);

struct SentimentSetup {
  const Segmenter* segmenter = nullptr;
  const SentimentLexicon* vietnamese_lexicon = nullptr;
  const SentimentLexicon* english_lexicon = nullptr;
  const WordList* vietnamese_abbreviations = nullptr;
  const WordList* english_abbreviations = nullptr;
  Thresholds thresholds;
  double saturation = kDefaultSaturation;
  std::optional<ExternalClassifierOptions> external;
};

struct SentimentAnalysis {
  std::vector<SentimentResult> results;
  SentimentDistribution distribution;
};

// Unknown-language documents use the English resources. Throws
// kInvalidInput when the chosen backend is not configured.
SentimentAnalysis analyse_sentiment(std::span<const Document> documents,
                                    Granularity granularity,
                                    SentimentBackend backend,
                                    const SentimentSetup& setup);

// `classes` is 3 or 5; with 3 the labels and distribution are projected.
std::string export_sentiment_json(const SentimentAnalysis& analysis,
                                  int classes = 5);

}  // namespace textlens

#endif  // TEXTLENS_SENTIMENT_H_
