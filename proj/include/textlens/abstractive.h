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

#ifndef TEXTLENS_ABSTRACTIVE_H_
#define TEXTLENS_ABSTRACTIVE_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "textlens/segment.h"
#include "textlens/text.h"

namespace textlens {

struct Aspect {
  std::string name;   // language-neutral key, e.g. "Social"
  std::string label;  // localised, e.g. "Xã hội"
  std::vector<std::string> keywords;  // folded; Vietnamese syllables joined by one space
};

// One section per language. Every aspect must appear in every section with
// at least one keyword.
class AspectCatalogue {
 public:
  // "[vi]" / "[en]" headers, then name<TAB>label<TAB>kw1,kw2,... lines.
  // Throws kInvalidInput.
  static AspectCatalogue parse(std::string_view text);
  static AspectCatalogue load(const std::filesystem::path& path);

  // Unknown language reads the English section. Throws kUnknownAspect.
  const Aspect& find(std::string_view name, Language language) const;
  const std::vector<Aspect>& aspects(Language language) const;
  std::vector<std::string> names() const;

 private:
  std::map<Language, std::vector<Aspect>> sections_;
};

inline constexpr double kAspectSaturation = 5.0;

struct AspectScore {
  std::string aspect;
  double confidence = 0.0;  // hits / (hits + k)
  std::vector<std::pair<std::string, std::size_t>> matched_terms;
};

// Counts keyword hits over word tokens, each document against its own
// language's keywords. Zero-hit aspects are omitted; order is confidence
// descending, then name.
std::vector<AspectScore> detect_aspects(
    std::span<const SegmentedText> documents, const AspectCatalogue& catalogue,
    double k = kAspectSaturation);

std::string export_aspects_json(const std::vector<AspectScore>& scores);

struct GenerationRequest {
  std::string source_text;
  std::string instruction;
  Language language = Language::kEnglish;
  std::size_t max_length = 256;
  std::optional<std::string> aspect;
};

// Pure. Throws kUnknownAspect.
std::string build_prompt(const GenerationRequest& request,
                         const AspectCatalogue& catalogue);

enum class GenerationBackend { kExternal, kOfflineStub };

std::string_view generation_backend_name(GenerationBackend backend);
GenerationBackend parse_generation_backend(std::string_view name);

inline constexpr std::string_view kStubMarker = "[offline-stub]";

struct GenerationClientOptions {
  std::string endpoint;
  std::chrono::milliseconds timeout{120000};
  double temperature = 0.2;
  int retries = 1;  // transport failures only
};

// Sends {prompt, max_tokens, temperature} and returns "completion". Throws
// kGenerationTimeout, kBackendUnavailable or kSchemaError.
std::string request_completion(const std::string& prompt,
                               std::size_t max_tokens,
                               const GenerationClientOptions& options);

struct GenerationSetup {
  std::optional<GenerationClientOptions> client;
  // Used by the offline stub.
  const Segmenter* segmenter = nullptr;
  const WordList* vietnamese_stopwords = nullptr;
  const WordList* english_stopwords = nullptr;
  const WordList* vietnamese_abbreviations = nullptr;
  const WordList* english_abbreviations = nullptr;
};

struct Summary {
  std::string text;
  GenerationBackend backend = GenerationBackend::kOfflineStub;
  std::string prompt_used;
};

// The offline stub returns the marker and the top three TextRank sentences
// in document order.
Summary generate_summary(const GenerationRequest& request,
                         const AspectCatalogue& catalogue,
                         GenerationBackend backend,
                         const GenerationSetup& setup);

std::string export_generated_summary_json(const Summary& summary);

struct RelatedTerm {
  std::string term;
  std::string gloss;

  friend bool operator==(const RelatedTerm&, const RelatedTerm&) = default;
};

class Thesaurus {
 public:
  // keyword<TAB>term|gloss<TAB>term|gloss...
  static Thesaurus parse(std::string_view text);
  static Thesaurus load(const std::filesystem::path& path);

  // Empty when the keyword is absent.
  std::vector<RelatedTerm> lookup(std::string_view keyword) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<RelatedTerm>> entries_;
};

inline constexpr std::size_t kMaxSuggestions = 5;

// At most kMaxSuggestions terms, never the keyword itself, no duplicates.
// Throws kInvalidInput on an empty keyword.
std::vector<RelatedTerm> suggest_related_terms(
    std::string_view keyword, Language language, GenerationBackend backend,
    const Thesaurus& thesaurus,
    const std::optional<GenerationClientOptions>& client);

std::string export_suggestions_json(std::string_view keyword,
                                    const std::vector<RelatedTerm>& terms);

}  // namespace textlens

#endif  // TEXTLENS_ABSTRACTIVE_H_
