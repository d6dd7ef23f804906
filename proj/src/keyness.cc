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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "textlens/csv.h"
#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

std::int64_t parse_count(std::string_view s, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw Error(ErrorCode::kInvalidInput,
                "bad count '" + std::string(s) + "' on line " +
                    std::to_string(line));
  }
  return value;
}

// sign(a/n1 - b/n2) without rounding.
int compare_rates(std::int64_t a, std::int64_t b, std::int64_t n1,
                  std::int64_t n2) {
  const __int128 lhs = static_cast<__int128>(a) * n2;
  const __int128 rhs = static_cast<__int128>(b) * n1;
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

}  // namespace

FrequencyTable build_frequency_table(std::span<const SegmentedText> texts,
                                     const WordList* stopwords) {
  FrequencyTable table;
  if (!texts.empty()) table.language = texts.front().language;
  for (const SegmentedText& text : texts) {
    if (text.language != table.language) {
      throw Error(ErrorCode::kMixedLanguage,
                  "frequency table inputs mix " +
                      std::string(language_code(table.language)) + " and " +
                      std::string(language_code(text.language)));
    }
    for (const Token& t : text.tokens) {
      if (!t.is_word) continue;
      std::string term = unicode::fold_case(t.surface);
      if (stopwords && stopwords->contains(term)) continue;
      ++table.counts[std::move(term)];
      ++table.total;
    }
  }
  return table;
}

ReferenceCorpus parse_reference_corpus(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty reference corpus");
  }
  const auto header = split_whitespace(lines.front());
  if (header.size() != 3 || header[0] != "refcorpus-v1") {
    throw Error(ErrorCode::kInvalidInput,
                "reference corpus must start with 'refcorpus-v1 NAME TOTAL'");
  }
  ReferenceCorpus ref;
  ref.name = std::string(header[1]);
  ref.total = parse_count(header[2], 1);
  std::int64_t sum = 0;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (trim(lines[n]).empty()) continue;
    const auto fields = split(lines[n], '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "expected term<TAB>count on line " + std::to_string(n + 1));
    }
    const std::int64_t count = parse_count(trim(fields[1]), n + 1);
    ref.counts[unicode::fold_case(unicode::to_nfc(fields[0]))] += count;
    sum += count;
  }
  if (sum > ref.total) {
    throw Error(ErrorCode::kInvalidInput,
                "reference corpus counts exceed the declared total");
  }
  return ref;
}

ReferenceCorpus load_reference_corpus(const std::filesystem::path& path) {
  return parse_reference_corpus(read_file(path));
}

LogLikelihood log_likelihood(std::int64_t a, std::int64_t b, std::int64_t n1,
                             std::int64_t n2) {
  if (n1 <= 0 || n2 <= 0 || a < 0 || b < 0 || a > n1 || b > n2 || a + b == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "log-likelihood needs 0<=a<=n1, 0<=b<=n2, n1,n2>0, a+b>0");
  }
  LogLikelihood out;
  const double total = static_cast<double>(n1) + static_cast<double>(n2);
  const double hits = static_cast<double>(a) + static_cast<double>(b);
  out.e1 = static_cast<double>(n1) * hits / total;
  out.e2 = static_cast<double>(n2) * hits / total;
  if (compare_rates(a, b, n1, n2) == 0) return out;
  double sum = 0.0;
  if (a > 0) sum += a * std::log(a / out.e1);
  if (b > 0) sum += b * std::log(b / out.e2);
  out.ll = std::max(0.0, 2.0 * sum);
  return out;
}

std::vector<KeynessRow> keyness_table(const FrequencyTable& study,
                                      const ReferenceCorpus& reference,
                                      std::int64_t min_count) {
  if (study.total <= 0 || reference.total <= 0) {
    throw Error(ErrorCode::kInvalidInput,
                "keyness needs non-empty study and reference corpora");
  }
  const std::int64_t n1 = study.total;
  const std::int64_t n2 = reference.total;
  std::vector<KeynessRow> rows;
  for (const auto& [term, a] : study.counts) {
    if (a < min_count || a == 0) continue;
    KeynessRow row;
    row.term = term;
    row.a = a;
    // Reference lists are truncated samples; clamp so b <= n2 holds.
    row.b = std::min(reference.count(term), n2);
    const LogLikelihood ll = log_likelihood(row.a, row.b, n1, n2);
    row.e1 = ll.e1;
    row.e2 = ll.e2;
    row.ll = ll.ll;
    row.signed_keyness = compare_rates(row.a, row.b, n1, n2) * ll.ll;
    const double study_rate = static_cast<double>(row.a) / n1;
    const double ref_rate =
        row.b > 0 ? static_cast<double>(row.b) / n2 : kZeroSmoothing;
    row.pct_diff = 100.0 * (study_rate - ref_rate) / ref_rate;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const KeynessRow& x, const KeynessRow& y) {
              if (x.signed_keyness != y.signed_keyness) {
                return x.signed_keyness > y.signed_keyness;
              }
              return x.term < y.term;
            });
  return rows;
}

std::string_view cloud_mode_name(CloudMode mode) {
  switch (mode) {
    case CloudMode::kFrequency: return "frequency";
    case CloudMode::kLogLikelihood: return "log_likelihood";
    case CloudMode::kKeyness: return "keyness";
  }
  return "frequency";
}

CloudMode parse_cloud_mode(std::string_view name) {
  if (name == "frequency") return CloudMode::kFrequency;
  if (name == "log_likelihood" || name == "loglikelihood" || name == "ll") {
    return CloudMode::kLogLikelihood;
  }
  if (name == "keyness") return CloudMode::kKeyness;
  throw Error(ErrorCode::kInvalidInput,
              "unknown word cloud mode '" + std::string(name) + "'");
}

std::vector<CloudEntry> wordcloud_payload(CloudMode mode,
                                          const FrequencyTable& study,
                                          const ReferenceCorpus* reference,
                                          const CloudOptions& options) {
  if (options.top_k < 1) {
    throw Error(ErrorCode::kInvalidInput, "top_k must be at least 1");
  }
  auto excluded = [&](const std::string& term) {
    return options.stopwords && options.stopwords->contains(term);
  };

  std::vector<CloudEntry> entries;
  if (mode == CloudMode::kFrequency) {
    for (const auto& [term, count] : study.counts) {
      if (count <= 0 || excluded(term)) continue;
      CloudEntry e;
      e.term = term;
      e.statistic = static_cast<double>(count);
      e.count_study = count;
      if (reference) e.count_reference = reference->count(term);
      entries.push_back(std::move(e));
    }
  } else {
    if (!reference) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(cloud_mode_name(mode)) +
                      " mode needs a reference corpus");
    }
    FrequencyTable filtered;
    const FrequencyTable* table = &study;
    if (options.stopwords) {
      filtered.language = study.language;
      for (const auto& [term, count] : study.counts) {
        if (excluded(term)) continue;
        filtered.counts.emplace(term, count);
        filtered.total += count;
      }
      table = &filtered;
    }
    if (table->total == 0) return entries;
    for (KeynessRow& row :
         keyness_table(*table, *reference, options.min_count)) {
      if (row.signed_keyness <= 0) continue;
      CloudEntry e;
      e.term = std::move(row.term);
      e.statistic =
          mode == CloudMode::kKeyness ? row.signed_keyness : row.ll;
      e.count_study = row.a;
      e.count_reference = row.b;
      if (mode == CloudMode::kKeyness) e.pct_diff = row.pct_diff;
      entries.push_back(std::move(e));
    }
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const CloudEntry& x, const CloudEntry& y) {
                     if (x.statistic != y.statistic) {
                       return x.statistic > y.statistic;
                     }
                     return x.term < y.term;
                   });
  if (entries.size() > options.top_k) entries.resize(options.top_k);
  if (!entries.empty()) {
    const double max = entries.front().statistic;
    for (CloudEntry& e : entries) e.weight = e.statistic / max;
  }
  return entries;
}

std::string export_cloud_csv(const std::vector<CloudEntry>& entries) {
  std::string out;
  csv::append_row(out, {"term", "weight", "statistic", "count_study",
                        "count_reference"});
  for (const CloudEntry& e : entries) {
    csv::append_row(out, {e.term, format_double(e.weight),
                          format_double(e.statistic),
                          std::to_string(e.count_study),
                          std::to_string(e.count_reference)});
  }
  return out;
}

std::string export_cloud_json(const std::vector<CloudEntry>& entries) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const CloudEntry& e : entries) {
    nlohmann::ordered_json j;
    j["term"] = e.term;
    j["weight"] = e.weight;
    j["statistic"] = e.statistic;
    j["count_study"] = e.count_study;
    j["count_reference"] = e.count_reference;
    if (e.pct_diff) j["pct_diff"] = *e.pct_diff;
    array.push_back(std::move(j));
  }
  return array.dump();
}

}  // namespace textlens
