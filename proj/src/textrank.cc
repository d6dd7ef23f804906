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

#include "textlens/textrank.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "json.hpp"
#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {

std::vector<std::string> content_words(const SegmentedText& text,
                                       const WordList& stopwords) {
  std::vector<std::string> out;
  for (const Token& t : text.tokens) {
    if (!t.is_word) continue;
    std::string folded = unicode::fold_case(t.surface);
    if (!stopwords.contains(folded)) out.push_back(std::move(folded));
  }
  return out;
}

double sentence_similarity(const std::vector<std::string>& s1,
                           const std::vector<std::string>& s2) {
  if (s1.size() <= 1 || s2.size() <= 1) return 0.0;
  std::set<std::string_view> a(s1.begin(), s1.end());
  std::size_t overlap = 0;
  std::set<std::string_view> seen;
  for (const auto& w : s2) {
    if (a.count(w) && seen.insert(w).second) ++overlap;
  }
  if (overlap == 0) return 0.0;
  return overlap / (std::log(static_cast<double>(s1.size())) +
                    std::log(static_cast<double>(s2.size())));
}

WeightMatrix similarity_matrix(
    const std::vector<std::vector<std::string>>& sentences) {
  const std::size_t n = sentences.size();
  WeightMatrix w(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = sentence_similarity(sentences[i], sentences[j]);
    }
  }
  return w;
}

TextRankResult textrank_scores(const WeightMatrix& weights,
                               const TextRankOptions& options) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "graph has no nodes");
  for (const auto& row : weights) {
    if (row.size() != n) {
      throw Error(ErrorCode::kInvalidInput, "weight matrix is not square");
    }
    for (double x : row) {
      if (!(x >= 0.0)) {
        throw Error(ErrorCode::kInvalidInput, "negative or NaN edge weight");
      }
    }
  }
  const double d = options.damping;
  std::vector<double> out_weight(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) out_weight[j] += weights[j][k];
    }
  }

  TextRankResult result;
  result.scores.assign(n, 1.0);
  std::vector<double> next(n);
  while (result.iterations < options.max_iterations) {
    double max_change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || out_weight[j] == 0.0 || weights[j][i] == 0.0) continue;
        sum += weights[j][i] / out_weight[j] * result.scores[j];
      }
      next[i] = (1.0 - d) + d * sum;
      max_change = std::max(max_change, std::abs(next[i] - result.scores[i]));
    }
    result.scores.swap(next);
    ++result.iterations;
    if (max_change < options.epsilon) {
      result.converged = true;
      break;
    }
  }
  return result;
}

SummaryTarget SummaryTarget::parse(std::string_view text) {
  text = trim(text);
  auto bad = [&] {
    return Error(ErrorCode::kInvalidInput,
                 "summary target '" + std::string(text) +
                     "' must be a fraction in (0,1], a percentage or a "
                     "positive count");
  };
  bool percent = false;
  if (!text.empty() && text.back() == '%') {
    percent = true;
    text.remove_suffix(1);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0)) {
    throw bad();
  }
  if (percent) value /= 100.0;
  const bool integral = !percent && text.find('.') == std::string_view::npos;
  if (integral) return count(static_cast<std::size_t>(value));
  if (value > 1.0) throw bad();
  return fraction(value);
}

std::size_t SummaryTarget::resolve(std::size_t sentence_count) const {
  if (!(value > 0) || (kind == Kind::kFraction && value > 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "invalid summary target");
  }
  std::size_t n = kind == Kind::kFraction
                      ? static_cast<std::size_t>(
                            std::ceil(value * static_cast<double>(sentence_count) -
                                      1e-9))
                      : static_cast<std::size_t>(value);
  return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(sentence_count, 1));
}

ExtractiveSummary summarise_sentences(
    const std::vector<std::string>& sentences,
    const std::vector<std::vector<std::string>>& content,
    const SummaryTarget& target, const TextRankOptions& options) {
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyInput, "text has no sentences");
  }
  if (content.size() != sentences.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "content words must align with sentences");
  }
  const TextRankResult ranks =
      textrank_scores(similarity_matrix(content), options);
  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranks.scores[a] > ranks.scores[b];
  });
  order.resize(target.resolve(sentences.size()));
  std::sort(order.begin(), order.end());

  ExtractiveSummary summary;
  summary.iterations = ranks.iterations;
  for (std::size_t i : order) {
    summary.selected.push_back({i, ranks.scores[i], sentences[i]});
  }
  return summary;
}

ExtractiveSummary summarise_extractive(std::string_view text,
                                       Language language,
                                       const SummaryTarget& target,
                                       const Segmenter& segmenter,
                                       const WordList& stopwords,
                                       const WordList& abbreviations,
                                       const TextRankOptions& options) {
  std::vector<std::string> sentences;
  std::vector<std::vector<std::string>> content;
  for (Sentence& s : split_sentences(text, abbreviations)) {
    content.push_back(
        content_words(segmenter.segment(s.text, language), stopwords));
    sentences.push_back(std::move(s.text));
  }
  return summarise_sentences(sentences, content, target, options);
}

ExtractiveSummary summarise_documents(std::span<const Document> documents,
                                      Language language,
                                      const SummaryTarget& target,
                                      const Segmenter& segmenter,
                                      const WordList& stopwords,
                                      const WordList& abbreviations,
                                      const TextRankOptions& options) {
  std::vector<std::string> sentences;
  std::vector<std::vector<std::string>> content;
  for (const Document& doc : documents) {
    for (Sentence& s : split_sentences(doc.raw_text, abbreviations)) {
      content.push_back(
          content_words(segmenter.segment(s.text, language), stopwords));
      sentences.push_back(std::move(s.text));
    }
  }
  return summarise_sentences(sentences, content, target, options);
}

std::string export_summary_json(const ExtractiveSummary& summary) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const SelectedSentence& s : summary.selected) {
    nlohmann::ordered_json j;
    j["index"] = s.index;
    j["score"] = s.score;
    j["text"] = s.text;
    items.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["summary"] = std::move(items);
  root["method"] = "textrank";
  return root.dump();
}

}  // namespace textlens
