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

// Term frequencies, log-likelihood keyness against a reference corpus and
// ranked word-cloud payloads.

#ifndef TEXTLENS_KEYNESS_H_
#define TEXTLENS_KEYNESS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textlens/text.h"

namespace textlens {

struct FrequencyTable {
  std::map<std::string, std::int64_t> counts;  // case-folded word surfaces
  std::int64_t total = 0;
  Language language = Language::kUnknown;
};

// Counts word tokens after case folding, skipping `stopwords` when given.
// Throws kMixedLanguage if the texts disagree on language.
FrequencyTable build_frequency_table(std::span<const SegmentedText> texts,
                                     const WordList* stopwords = nullptr);

struct ReferenceCorpus {
  std::string name;
  std::int64_t total = 0;  // may exceed the sum of the listed counts
  std::unordered_map<std::string, std::int64_t> counts;

  std::int64_t count(const std::string& term) const {
    auto it = counts.find(term);
    return it == counts.end() ? 0 : it->second;
  }
};

// "refcorpus-v1 <name> <total>" then "term<TAB>count" lines. Terms are
// folded on load; repeated terms are summed.
ReferenceCorpus parse_reference_corpus(std::string_view text);
ReferenceCorpus load_reference_corpus(const std::filesystem::path& path);

struct LogLikelihood {
  double e1 = 0.0;
  double e2 = 0.0;
  double ll = 0.0;
};

// Two-cell G2 for `a` of `n1` study tokens against `b` of `n2` reference
// tokens. Zero counts contribute nothing. ll is exactly 0 when
// a/n1 == b/n2. Throws kInvalidInput unless 0<=a<=n1, 0<=b<=n2, n1>0,
// n2>0 and a+b>0.
LogLikelihood log_likelihood(std::int64_t a, std::int64_t b, std::int64_t n1,
                             std::int64_t n2);

// Smoothing for the reference frequency when b is 0: b' = kZeroSmoothing*n2.
inline constexpr double kZeroSmoothing = 1e-12;

struct KeynessRow {
  std::string term;
  std::int64_t a = 0;
  std::int64_t b = 0;
  double e1 = 0.0;
  double e2 = 0.0;
  double ll = 0.0;
  double signed_keyness = 0.0;  // +ll when overused in the study, -ll under
  double pct_diff = 0.0;
};

// One row per study term with a >= min_count, sorted by signed keyness
// descending then term ascending. Throws kInvalidInput if either total is 0.
std::vector<KeynessRow> keyness_table(const FrequencyTable& study,
                                      const ReferenceCorpus& reference,
                                      std::int64_t min_count = 2);

enum class CloudMode { kFrequency, kLogLikelihood, kKeyness };

std::string_view cloud_mode_name(CloudMode mode);
CloudMode parse_cloud_mode(std::string_view name);

struct CloudEntry {
  std::string term;
  double weight = 0.0;     // statistic / max statistic, in (0, 1]
  double statistic = 0.0;  // count, ll, or signed keyness
  std::int64_t count_study = 0;
  std::int64_t count_reference = 0;
  std::optional<double> pct_diff;  // keyness mode only
};

struct CloudOptions {
  std::size_t top_k = 50;
  std::int64_t min_count = 2;  // reference modes only
  const WordList* stopwords = nullptr;
};

// Frequency ranks by raw count. LogLikelihood ranks overused terms by ll.
// Keyness ranks overused terms by signed keyness and attaches pct_diff.
// `reference` may be null in frequency mode only (kInvalidInput otherwise).
std::vector<CloudEntry> wordcloud_payload(CloudMode mode,
                                          const FrequencyTable& study,
                                          const ReferenceCorpus* reference,
                                          const CloudOptions& options);

// Header "term,weight,statistic,count_study,count_reference".
std::string export_cloud_csv(const std::vector<CloudEntry>& entries);
// JSON array of objects with the CSV columns plus pct_diff when present.
std::string export_cloud_json(const std::vector<CloudEntry>& entries);

}  // namespace textlens

#endif  // TEXTLENS_KEYNESS_H_
