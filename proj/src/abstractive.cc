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

#include "textlens/abstractive.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "textlens/error.h"
#include "textlens/http_client.h"
#include "textlens/strings.h"
#include "textlens/textrank.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

std::string normalise_term(std::string_view term) {
  return join(split_whitespace(unicode::fold_case(unicode::to_nfc(term))), " ");
}

Language section_language(Language language) {
  return language == Language::kVietnamese ? Language::kVietnamese
                                           : Language::kEnglish;
}

}  // namespace

AspectCatalogue AspectCatalogue::parse(std::string_view text) {
  AspectCatalogue catalogue;
  std::vector<Aspect>* section = nullptr;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kInvalidInput,
                 "aspect catalogue line " + std::to_string(line_no) + ": " +
                     why);
  };
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      const Language lang = parse_language(line.substr(1, line.size() - 2));
      if (catalogue.sections_.count(lang)) throw fail("repeated section");
      section = &catalogue.sections_[lang];
      continue;
    }
    if (!section) throw fail("entry before any [vi] or [en] section");
    const auto fields = split(raw, '\t');
    if (fields.size() != 3) throw fail("expected name<TAB>label<TAB>keywords");
    Aspect aspect{std::string(trim(fields[0])), std::string(trim(fields[1])),
                  {}};
    for (std::string_view kw : split(fields[2], ',')) {
      std::string term = normalise_term(kw);
      if (!term.empty() &&
          std::find(aspect.keywords.begin(), aspect.keywords.end(), term) ==
              aspect.keywords.end()) {
        aspect.keywords.push_back(std::move(term));
      }
    }
    if (aspect.name.empty() || aspect.label.empty()) {
      throw fail("empty aspect name or label");
    }
    if (aspect.keywords.empty()) {
      throw fail("aspect '" + aspect.name + "' has no keywords");
    }
    for (const Aspect& a : *section) {
      if (a.name == aspect.name) throw fail("duplicate aspect " + a.name);
    }
    section->push_back(std::move(aspect));
  }
  if (catalogue.sections_.empty()) {
    throw Error(ErrorCode::kInvalidInput, "aspect catalogue is empty");
  }
  const std::vector<std::string> reference = [&] {
    std::vector<std::string> names;
    for (const Aspect& a : catalogue.sections_.begin()->second) {
      names.push_back(a.name);
    }
    std::sort(names.begin(), names.end());
    return names;
  }();
  for (const auto& [lang, aspects] : catalogue.sections_) {
    std::vector<std::string> names;
    for (const Aspect& a : aspects) names.push_back(a.name);
    std::sort(names.begin(), names.end());
    if (names != reference) {
      throw Error(ErrorCode::kInvalidInput,
                  "aspect catalogue section [" +
                      std::string(language_code(lang)) +
                      "] does not list the same aspects as the others");
    }
  }
  return catalogue;
}

AspectCatalogue AspectCatalogue::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

const std::vector<Aspect>& AspectCatalogue::aspects(Language language) const {
  static const std::vector<Aspect> kNone;
  auto it = sections_.find(section_language(language));
  return it == sections_.end() ? kNone : it->second;
}

const Aspect& AspectCatalogue::find(std::string_view name,
                                    Language language) const {
  const std::string wanted = unicode::fold_case(unicode::to_nfc(name));
  for (const Aspect& a : aspects(language)) {
    if (unicode::fold_case(a.name) == wanted ||
        unicode::fold_case(a.label) == wanted) {
      return a;
    }
  }
  throw Error(ErrorCode::kUnknownAspect,
              "unknown aspect '" + std::string(name) + "'");
}

std::vector<std::string> AspectCatalogue::names() const {
  std::vector<std::string> out;
  if (!sections_.empty()) {
    for (const Aspect& a : sections_.begin()->second) out.push_back(a.name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AspectScore> detect_aspects(
    std::span<const SegmentedText> documents, const AspectCatalogue& catalogue,
    double k) {
  std::map<std::string, std::map<std::string, std::size_t>> hits;
  for (const SegmentedText& doc : documents) {
    std::unordered_map<std::string, std::vector<const std::string*>> index;
    for (const Aspect& a : catalogue.aspects(doc.language)) {
      for (const std::string& kw : a.keywords) index[kw].push_back(&a.name);
    }
    for (const Token& t : doc.tokens) {
      if (!t.is_word) continue;
      auto it = index.find(unicode::fold_case(t.surface));
      if (it == index.end()) continue;
      for (const std::string* name : it->second) ++hits[*name][it->first];
    }
  }
  std::vector<AspectScore> out;
  for (auto& [name, terms] : hits) {
    AspectScore score;
    score.aspect = name;
    std::size_t total = 0;
    for (auto& [term, count] : terms) {
      total += count;
      score.matched_terms.emplace_back(term, count);
    }
    std::stable_sort(score.matched_terms.begin(), score.matched_terms.end(),
                     [](const auto& a, const auto& b) {
                       return a.second > b.second;
                     });
    const double h = static_cast<double>(total);
    score.confidence = h / (h + k);
    out.push_back(std::move(score));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const AspectScore& a, const AspectScore& b) {
                     return a.confidence > b.confidence;
                   });
  return out;
}

std::string export_aspects_json(const std::vector<AspectScore>& scores) {
  using nlohmann::ordered_json;
  ordered_json items = ordered_json::array();
  for (const AspectScore& s : scores) {
    ordered_json terms = ordered_json::array();
    for (const auto& [term, count] : s.matched_terms) {
      terms.push_back({{"term", term}, {"count", count}});
    }
    ordered_json j;
    j["aspect"] = s.aspect;
    j["confidence"] = s.confidence;
    j["matched_terms"] = std::move(terms);
    items.push_back(std::move(j));
  }
  ordered_json root;
  root["aspects"] = std::move(items);
  return root.dump();
}

std::string build_prompt(const GenerationRequest& request,
                         const AspectCatalogue& catalogue) {
  const bool vi = request.language == Language::kVietnamese;
  std::string p;
  p += "You are an analyst summarising free-text responses collected in "
       "surveys and open-ended feedback.\n";
  p += vi ? "Write the summary in Vietnamese.\n"
          : "Write the summary in English.\n";
  if (request.aspect) {
    const Aspect& a = catalogue.find(*request.aspect, request.language);
    const std::string label =
        a.label == a.name ? a.name : a.label + " / " + a.name;
    p += "Focus only on content about the aspect \"" + label +
         "\". Relevant keywords: " + join(a.keywords, ", ") +
         ". Leave out content unrelated to this aspect.\n";
  }
  const std::string_view instruction = trim(request.instruction);
  if (!instruction.empty()) {
    p += "Additional instruction: ";
    p += instruction;
    p += "\n";
  }
  p += "Keep the summary under " + std::to_string(request.max_length) +
       " tokens.\n";
  p += "<<<SOURCE\n";
  p += request.source_text;
  p += "\nSOURCE>>>\n";
  return p;
}

std::string_view generation_backend_name(GenerationBackend backend) {
  return backend == GenerationBackend::kExternal ? "external" : "offline_stub";
}

GenerationBackend parse_generation_backend(std::string_view name) {
  if (name == "external") return GenerationBackend::kExternal;
  if (name == "offline_stub" || name == "stub") {
    return GenerationBackend::kOfflineStub;
  }
  throw Error(ErrorCode::kInvalidInput,
              "generation backend must be 'external' or 'offline_stub', got '" +
                  std::string(name) + "'");
}

std::string request_completion(const std::string& prompt,
                               std::size_t max_tokens,
                               const GenerationClientOptions& options) {
  const http::Url url = http::parse_url(options.endpoint);
  nlohmann::json body;
  body["prompt"] = prompt;
  body["max_tokens"] = max_tokens;
  body["temperature"] = options.temperature;
  const std::string payload = body.dump();

  http::Response response;
  for (int attempt = 0;; ++attempt) {
    try {
      response = http::post_json(url, payload, options.timeout);
      break;
    } catch (const http::TransportError& e) {
      if (attempt < options.retries) continue;
      if (e.timed_out()) {
        throw Error(ErrorCode::kGenerationTimeout,
                    "generation endpoint " + options.endpoint +
                        " timed out");
      }
      throw Error(ErrorCode::kBackendUnavailable,
                  "generation endpoint " + options.endpoint +
                      " unreachable: " + e.what());
    }
  }
  if (response.status < 200 || response.status >= 300) {
    throw Error(ErrorCode::kBackendUnavailable,
                "generation endpoint returned HTTP " +
                    std::to_string(response.status));
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(response.body);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kSchemaError, "generation response is not JSON");
  }
  if (!j.is_object() || !j.contains("completion") ||
      !j["completion"].is_string()) {
    throw Error(ErrorCode::kSchemaError,
                "generation response lacks a string 'completion'");
  }
  return j["completion"].get<std::string>();
}

Summary generate_summary(const GenerationRequest& request,
                         const AspectCatalogue& catalogue,
                         GenerationBackend backend,
                         const GenerationSetup& setup) {
  Summary summary;
  summary.backend = backend;
  summary.prompt_used = build_prompt(request, catalogue);
  if (backend == GenerationBackend::kExternal) {
    if (!setup.client) {
      throw Error(ErrorCode::kInvalidInput,
                  "external generation backend is not configured");
    }
    summary.text = request_completion(summary.prompt_used, request.max_length,
                                      *setup.client);
    return summary;
  }
  if (!setup.segmenter) {
    throw Error(ErrorCode::kInvalidInput, "offline stub needs a segmenter");
  }
  const bool vi = request.language == Language::kVietnamese;
  static const WordList kEmpty;
  const WordList* stopwords =
      vi ? setup.vietnamese_stopwords : setup.english_stopwords;
  const WordList* abbreviations =
      vi ? setup.vietnamese_abbreviations : setup.english_abbreviations;
  const ExtractiveSummary top = summarise_extractive(
      request.source_text, vi ? Language::kVietnamese : Language::kEnglish,
      SummaryTarget::count(3), *setup.segmenter,
      stopwords ? *stopwords : kEmpty, abbreviations ? *abbreviations : kEmpty);
  summary.text = kStubMarker;
  for (const SelectedSentence& s : top.selected) {
    summary.text += ' ';
    summary.text += s.text;
  }
  return summary;
}

std::string export_generated_summary_json(const Summary& summary) {
  nlohmann::ordered_json j;
  j["summary"] = summary.text;
  j["backend"] = generation_backend_name(summary.backend);
  j["prompt_used"] = summary.prompt_used;
  return j.dump();
}

Thesaurus Thesaurus::parse(std::string_view text) {
  Thesaurus thesaurus;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split(line, '\t');
    const std::string keyword = normalise_term(fields[0]);
    if (keyword.empty()) {
      throw Error(ErrorCode::kInvalidInput,
                  "thesaurus line " + std::to_string(line_no) +
                      ": empty keyword");
    }
    auto& entries = thesaurus.entries_[keyword];
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::size_t bar = fields[i].find('|');
      std::string term = std::string(trim(fields[i].substr(0, bar)));
      std::string gloss =
          bar == std::string_view::npos
              ? std::string()
              : std::string(trim(fields[i].substr(bar + 1)));
      if (!term.empty()) {
        entries.push_back({unicode::to_nfc(term), std::move(gloss)});
      }
    }
  }
  return thesaurus;
}

Thesaurus Thesaurus::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::vector<RelatedTerm> Thesaurus::lookup(std::string_view keyword) const {
  auto it = entries_.find(normalise_term(keyword));
  return it == entries_.end() ? std::vector<RelatedTerm>{} : it->second;
}

namespace {

std::vector<RelatedTerm> parse_suggestion_lines(std::string_view completion) {
  std::vector<RelatedTerm> out;
  for (std::string_view line : split_lines(completion)) {
    line = trim(line);
    while (!line.empty() &&
           (line.front() == '-' || line.front() == '*' ||
            (line.front() >= '0' && line.front() <= '9') ||
            line.front() == '.' || line.front() == ')')) {
      line.remove_prefix(1);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t bar = line.find('|');
    out.push_back({std::string(trim(line.substr(0, bar))),
                   bar == std::string_view::npos
                       ? std::string()
                       : std::string(trim(line.substr(bar + 1)))});
  }
  return out;
}

}  // namespace

std::vector<RelatedTerm> suggest_related_terms(
    std::string_view keyword, Language language, GenerationBackend backend,
    const Thesaurus& thesaurus,
    const std::optional<GenerationClientOptions>& client) {
  const std::string key = normalise_term(keyword);
  if (key.empty()) {
    throw Error(ErrorCode::kInvalidInput, "keyword must not be empty");
  }
  std::vector<RelatedTerm> candidates;
  if (backend == GenerationBackend::kOfflineStub) {
    candidates = thesaurus.lookup(key);
  } else {
    if (!client) {
      throw Error(ErrorCode::kInvalidInput,
                  "external generation backend is not configured");
    }
    const std::string lang_name =
        language == Language::kVietnamese ? "Vietnamese" : "English";
    const std::string prompt =
        "List up to " + std::to_string(kMaxSuggestions) + " " + lang_name +
        " words or short phrases related in meaning to \"" +
        std::string(trim(keyword)) +
        "\", such as synonyms or paraphrases. Answer with one per line "
        "written as term|short English gloss, and nothing else.\n";
    candidates = parse_suggestion_lines(request_completion(prompt, 128, *client));
  }
  std::vector<RelatedTerm> out;
  std::set<std::string> seen = {key};
  for (RelatedTerm& t : candidates) {
    if (out.size() == kMaxSuggestions) break;
    if (!seen.insert(normalise_term(t.term)).second) continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::string export_suggestions_json(std::string_view keyword,
                                    const std::vector<RelatedTerm>& terms) {
  using nlohmann::ordered_json;
  ordered_json related = ordered_json::array();
  for (const RelatedTerm& t : terms) {
    related.push_back({{"term", t.term}, {"gloss", t.gloss}});
  }
  ordered_json j;
  j["keyword"] = std::string(keyword);
  j["related"] = std::move(related);
  return j.dump();
}

}  // namespace textlens
