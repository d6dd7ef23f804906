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

#include "textlens/sentiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <thread>

#include "json.hpp"
#include "textlens/error.h"
#include "textlens/http_client.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

std::string normalise_term(std::string_view term) {
  return join(split_whitespace(unicode::fold_case(unicode::to_nfc(term))), " ");
}

double parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidInput,
                "lexicon line " + std::to_string(line_no) + ": '" +
                    std::string(field) + "' is not a number");
  }
  return value;
}

bool is_terminator(const Token& t) {
  return !t.is_word &&
         (t.surface == "." || t.surface == "!" || t.surface == "?" ||
          t.surface == "…");
}

}  // namespace

SentimentLexicon SentimentLexicon::parse(std::string_view text) {
  SentimentLexicon lexicon;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split(line, '\t');
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::kInvalidInput,
                   "lexicon line " + std::to_string(line_no) + ": " + why);
    };
    if (fields[0] == "NEG") {
      if (fields.size() != 2) throw fail("NEG takes one term");
      lexicon.negators.insert(normalise_term(fields[1]));
    } else if (fields[0] == "INT") {
      if (fields.size() != 3) throw fail("INT takes a term and a multiplier");
      const double m = parse_number(fields[2], line_no);
      if (!(m > 0.0)) throw fail("multiplier must be positive");
      lexicon.intensifiers[normalise_term(fields[1])] = m;
    } else {
      if (fields.size() != 2) throw fail("expected term<TAB>polarity");
      const double p = parse_number(fields[1], line_no);
      if (p < -1.0 || p > 1.0) throw fail("polarity outside [-1, 1]");
      const std::string term = normalise_term(fields[0]);
      if (term.empty()) throw fail("empty term");
      lexicon.polarity[term] = p;
    }
  }
  return lexicon;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

Label3 project(Label5 label) {
  switch (label) {
    case Label5::kVeryNegative:
    case Label5::kNegative:
      return Label3::kNegative;
    case Label5::kNeutral:
      return Label3::kNeutral;
    case Label5::kPositive:
    case Label5::kVeryPositive:
      return Label3::kPositive;
  }
  return Label3::kNeutral;
}

std::string_view label_name(Label5 label) {
  switch (label) {
    case Label5::kVeryNegative: return "very_negative";
    case Label5::kNegative: return "negative";
    case Label5::kNeutral: return "neutral";
    case Label5::kPositive: return "positive";
    case Label5::kVeryPositive: return "very_positive";
  }
  return "neutral";
}

std::string_view label_name(Label3 label) {
  switch (label) {
    case Label3::kNegative: return "negative";
    case Label3::kNeutral: return "neutral";
    case Label3::kPositive: return "positive";
  }
  return "neutral";
}

Label5 parse_label5(std::string_view name) {
  for (Label5 l : kAllLabels5) {
    if (label_name(l) == name) return l;
  }
  throw Error(ErrorCode::kSchemaError,
              "unknown sentiment label '" + std::string(name) + "'");
}

void Thresholds::validate() const {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!std::isfinite(cuts[i]) || (i > 0 && !(cuts[i - 1] < cuts[i]))) {
      throw Error(ErrorCode::kInvalidThresholds,
                  "thresholds must be four finite, strictly ascending values");
    }
  }
}

Classification classify(double raw_score, const Thresholds& thresholds,
                        double saturation) {
  thresholds.validate();
  if (!(saturation > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "saturation must be positive");
  }
  const auto& c = thresholds.cuts;
  Label5 label;
  if (raw_score < c[0]) {
    label = Label5::kVeryNegative;
  } else if (raw_score < c[1]) {
    label = Label5::kNegative;
  } else if (raw_score <= c[2]) {
    label = Label5::kNeutral;
  } else if (raw_score <= c[3]) {
    label = Label5::kPositive;
  } else {
    label = Label5::kVeryPositive;
  }
  return {label, project(label),
          std::min(1.0, std::abs(raw_score) / saturation)};
}

double score_lexicon(const SegmentedText& tokens,
                     const SentimentLexicon& lexicon) {
  double score = 0.0;
  int window = 0;
  double multiplier = 1.0;
  for (const Token& t : tokens.tokens) {
    if (!t.is_word) {
      if (is_terminator(t)) {
        window = 0;
        multiplier = 1.0;
      }
      continue;
    }
    const std::string term = unicode::fold_case(t.surface);
    if (lexicon.negators.count(term)) {
      window = kNegationWindow;
      continue;
    }
    if (auto it = lexicon.intensifiers.find(term);
        it != lexicon.intensifiers.end()) {
      multiplier *= it->second;
    } else if (auto hit = lexicon.polarity.find(term);
               hit != lexicon.polarity.end()) {
      double value = hit->second * multiplier;
      if (window > 0) value = -value;
      score += value;
      multiplier = 1.0;
    }
    if (window > 0) --window;
  }
  return score;
}

SentimentDistribution distribution(std::span<const SentimentResult> results) {
  SentimentDistribution d;
  for (Label5 l : kAllLabels5) d.counts[l] = 0;
  for (const SentimentResult& r : results) ++d.counts[r.label5];
  d.total = results.size();
  for (Label5 l : kAllLabels5) {
    d.fractions[l] = d.total == 0 ? 0.0
                                  : static_cast<double>(d.counts[l]) /
                                        static_cast<double>(d.total);
  }
  return d;
}

namespace {

std::vector<SentimentResult> parse_classifier_response(
    const std::string& body, std::size_t expected) {
  auto schema = [](const std::string& why) {
    return Error(ErrorCode::kSchemaError, "classifier response: " + why);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception&) {
    throw schema("body is not JSON");
  }
  if (!j.is_object() || !j.contains("results") || !j["results"].is_array()) {
    throw schema("missing 'results' array");
  }
  const auto& items = j["results"];
  if (items.size() != expected) {
    throw schema("expected " + std::to_string(expected) + " results, got " +
                 std::to_string(items.size()));
  }
  std::vector<SentimentResult> out;
  out.reserve(expected);
  for (const auto& item : items) {
    if (!item.is_object() || !item.contains("label") ||
        !item["label"].is_string() || !item.contains("confidence") ||
        !item["confidence"].is_number()) {
      throw schema("each result needs a string 'label' and numeric "
                   "'confidence'");
    }
    const double confidence = item["confidence"].get<double>();
    if (!(confidence >= 0.0 && confidence <= 1.0)) {
      throw schema("confidence outside [0, 1]");
    }
    SentimentResult r;
    r.label5 = parse_label5(item["label"].get<std::string>());
    r.label3 = project(r.label5);
    r.confidence = confidence;
    const Label3 side = r.label3;
    r.raw_score = side == Label3::kPositive   ? confidence
                  : side == Label3::kNegative ? -confidence
                                              : 0.0;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<SentimentResult> external_classify(
    const std::vector<std::string>& units,
    const ExternalClassifierOptions& options) {
  if (units.empty()) return {};
  const http::Url url = http::parse_url(options.endpoint);
  const std::size_t batch = std::max<std::size_t>(options.batch_size, 1);
  const std::size_t batches = (units.size() + batch - 1) / batch;
  std::vector<std::vector<SentimentResult>> parts(batches);
  std::vector<std::exception_ptr> errors(batches);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (std::size_t b = next++; b < batches && !failed; b = next++) {
      try {
        const std::size_t begin = b * batch;
        const std::size_t end = std::min(units.size(), begin + batch);
        nlohmann::json request;
        request["texts"] = std::vector<std::string>(units.begin() + begin,
                                                    units.begin() + end);
        http::Response response;
        try {
          response = http::post_json(url, request.dump(), options.timeout);
        } catch (const http::TransportError& e) {
          throw Error(ErrorCode::kBackendUnavailable,
                      "classifier at " + options.endpoint +
                          " unreachable: " + e.what());
        }
        if (response.status < 200 || response.status >= 300) {
          throw Error(ErrorCode::kBackendUnavailable,
                      "classifier returned HTTP " +
                          std::to_string(response.status));
        }
        parts[b] = parse_classifier_response(response.body, end - begin);
      } catch (...) {
        errors[b] = std::current_exception();
        failed = true;
      }
    }
  };
  const std::size_t threads =
      std::min(std::max<std::size_t>(options.max_in_flight, 1), batches);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<SentimentResult> out;
  out.reserve(units.size());
  for (auto& part : parts) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < units.size(); ++i) out[i].unit_text = units[i];
  return out;
}

std::string_view granularity_name(Granularity granularity) {
  return granularity == Granularity::kPerSentence ? "sentence" : "document";
}

Granularity parse_granularity(std::string_view name) {
  if (name == "sentence") return Granularity::kPerSentence;
  if (name == "document") return Granularity::kPerDocument;
  throw Error(ErrorCode::kInvalidInput,
              "granularity must be 'sentence' or 'document', got '" +
                  std::string(name) + "'");
}

std::string_view backend_name(SentimentBackend backend) {
  return backend == SentimentBackend::kLexicon ? "lexicon" : "external";
}

SentimentBackend parse_backend(std::string_view name) {
  if (name == "lexicon") return SentimentBackend::kLexicon;
  if (name == "external") return SentimentBackend::kExternal;
  throw Error(ErrorCode::kInvalidInput,
              "backend must be 'lexicon' or 'external', got '" +
                  std::string(name) + "'");
}

SentimentAnalysis analyse_sentiment(std::span<const Document> documents,
                                    Granularity granularity,
                                    SentimentBackend backend,
                                    const SentimentSetup& setup) {
  setup.thresholds.validate();
  if (backend == SentimentBackend::kExternal && !setup.external) {
    throw Error(ErrorCode::kInvalidInput,
                "external sentiment backend is not configured");
  }
  if (backend == SentimentBackend::kLexicon &&
      (!setup.segmenter || !setup.vietnamese_lexicon ||
       !setup.english_lexicon)) {
    throw Error(ErrorCode::kInvalidInput,
                "lexicon sentiment backend is not configured");
  }
  static const WordList kNoAbbreviations;

  struct Unit {
    const Document* doc;
    std::string text;
  };
  std::vector<Unit> units;
  for (const Document& doc : documents) {
    const bool vi = doc.language == Language::kVietnamese;
    if (granularity == Granularity::kPerDocument) {
      std::string_view text = trim(doc.raw_text);
      if (!text.empty()) units.push_back({&doc, std::string(text)});
      continue;
    }
    const WordList* abbreviations =
        vi ? setup.vietnamese_abbreviations : setup.english_abbreviations;
    for (Sentence& s : split_sentences(
             doc.raw_text, abbreviations ? *abbreviations : kNoAbbreviations)) {
      units.push_back({&doc, std::move(s.text)});
    }
  }

  SentimentAnalysis analysis;
  if (backend == SentimentBackend::kExternal) {
    std::vector<std::string> texts;
    texts.reserve(units.size());
    for (const Unit& u : units) texts.push_back(u.text);
    analysis.results = external_classify(texts, *setup.external);
    for (std::size_t i = 0; i < units.size(); ++i) {
      analysis.results[i].document_id = units[i].doc->id;
    }
  } else {
    for (Unit& u : units) {
      const bool vi = u.doc->language == Language::kVietnamese;
      const Language lang = vi ? Language::kVietnamese : Language::kEnglish;
      const SentimentLexicon& lexicon =
          vi ? *setup.vietnamese_lexicon : *setup.english_lexicon;
      const double raw =
          score_lexicon(setup.segmenter->segment(u.text, lang), lexicon);
      const Classification c =
          classify(raw, setup.thresholds, setup.saturation);
      analysis.results.push_back({u.doc->id, std::move(u.text), raw, c.label5,
                                  c.label3, c.confidence});
    }
  }
  analysis.distribution = distribution(analysis.results);
  return analysis;
}

std::string export_sentiment_json(const SentimentAnalysis& analysis,
                                  int classes) {
  if (classes != 3 && classes != 5) {
    throw Error(ErrorCode::kInvalidInput, "classes must be 3 or 5");
  }
  using nlohmann::ordered_json;
  ordered_json results = ordered_json::array();
  for (const SentimentResult& r : analysis.results) {
    ordered_json j;
    j["document_id"] = r.document_id;
    j["text"] = r.unit_text;
    j["label"] = classes == 5 ? label_name(r.label5) : label_name(r.label3);
    j["confidence"] = r.confidence;
    j["raw_score"] = r.raw_score;
    results.push_back(std::move(j));
  }
  const SentimentDistribution& d = analysis.distribution;
  ordered_json counts = ordered_json::object();
  ordered_json fractions = ordered_json::object();
  if (classes == 5) {
    for (Label5 l : kAllLabels5) {
      counts[std::string(label_name(l))] = d.counts.at(l);
      fractions[std::string(label_name(l))] = d.fractions.at(l);
    }
  } else {
    std::map<Label3, std::size_t> c3;
    for (Label3 l : kAllLabels3) c3[l] = 0;
    for (Label5 l : kAllLabels5) c3[project(l)] += d.counts.at(l);
    for (Label3 l : kAllLabels3) {
      counts[std::string(label_name(l))] = c3[l];
      fractions[std::string(label_name(l))] =
          d.total == 0 ? 0.0
                       : static_cast<double>(c3[l]) /
                             static_cast<double>(d.total);
    }
  }
  ordered_json root;
  root["classes"] = classes;
  root["results"] = std::move(results);
  root["distribution"] = {{"counts", std::move(counts)},
                          {"fractions", std::move(fractions)},
                          {"total", d.total}};
  return root.dump();
}

}  // namespace textlens
