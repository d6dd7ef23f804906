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

// Loading raw text into documents, per-document language detection and the
// in-memory corpus store.

#ifndef TEXTLENS_INGEST_H_
#define TEXTLENS_INGEST_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textlens/text.h"

namespace textlens {

enum class Source { kPlainTextFile, kCsvCell, kDirectInput };

std::string_view source_name(Source source);

struct Document {
  std::string id;
  std::string raw_text;  // NFC, LF line endings
  Language language = Language::kUnknown;
  Source source = Source::kPlainTextFile;
  std::optional<std::string> column_label;
};

// Decodes UTF-8 (with or without BOM), normalises line endings to LF and
// composes to NFC. Throws kDecodeError on invalid UTF-8.
Document load_plain_text(std::string_view bytes,
                         Source source = Source::kPlainTextFile);

// One document per non-blank cell of `text_column`, in row order. The
// selector matches a header name exactly, or is a 0-based column index
// written as "#3". Throws kCsvParseError, kColumnNotFound, kDecodeError.
std::vector<Document> load_csv(std::string_view bytes,
                               std::string_view text_column);

// Scores Vietnamese-specific letters plus stopword hits against English
// stopword hits. Texts with letters but no evidence either way are English;
// texts without letters are Unknown.
class LanguageDetector {
 public:
  LanguageDetector(WordList vietnamese_stopwords, WordList english_stopwords);

  struct Scores {
    std::size_t vietnamese = 0;
    std::size_t english = 0;
    bool has_letters = false;
  };

  Scores score(std::string_view text) const;
  Language detect(std::string_view text) const;

 private:
  WordList vietnamese_stopwords_;
  WordList english_stopwords_;
};

// True for ă â đ ê ô ơ ư and every tone-marked vowel, either case.
bool is_vietnamese_specific(char32_t cp);

// An immutable view of a corpus at one point in time. Cheap to copy.
class CorpusSnapshot {
 public:
  CorpusSnapshot();
  CorpusSnapshot(std::shared_ptr<const std::vector<Document>> documents,
                 std::uint64_t version);

  std::span<const Document> documents() const { return *documents_; }
  std::size_t size() const { return documents_->size(); }
  bool empty() const { return documents_->empty(); }
  const Document& operator[](std::size_t i) const { return (*documents_)[i]; }
  // Increments on every mutation of the owning corpus.
  std::uint64_t version() const { return version_; }

 private:
  std::shared_ptr<const std::vector<Document>> documents_;
  std::uint64_t version_ = 0;
};

// The language with the most documents, counting Unknown as English. Ties
// and an empty corpus go to Vietnamese.
Language dominant_language(std::span<const Document> documents);

// Documents routed to `language`; Unknown documents count as English.
std::vector<Document> documents_in_language(std::span<const Document> documents,
                                            Language language);

// Per-language document and whitespace-token counts.
struct CorpusStats {
  std::map<Language, std::size_t> documents;
  std::map<Language, std::size_t> tokens;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats compute_stats(std::span<const Document> documents);

// Copy-on-write document store. Readers take snapshots; writers are
// serialised. Safe for concurrent use.
class Corpus {
 public:
  Corpus();

  // Assigns "doc-N" when `doc.id` is empty. Throws kInvalidInput on a
  // duplicate id. Returns the id.
  std::string add(Document doc);
  std::vector<std::string> add_all(std::vector<Document> docs);

  CorpusSnapshot snapshot() const;
  std::chrono::system_clock::time_point created_at() const {
    return created_at_;
  }
  std::size_t size() const;
  std::size_t total_bytes() const;

  // Memoised; invalidated by every add.
  CorpusStats stats() const;

 private:
  mutable std::shared_mutex mutex_;
  std::shared_ptr<const std::vector<Document>> documents_;
  std::uint64_t version_ = 0;
  std::uint64_t next_id_ = 1;
  std::size_t total_bytes_ = 0;
  std::chrono::system_clock::time_point created_at_;
  mutable std::optional<CorpusStats> stats_cache_;
};

// `{"documents":[{"id","language","source","text"}]}` with that field order.
std::string export_corpus_json(const CorpusSnapshot& snapshot);

// The same listing without text: `{"documents":[{"id","language","source",
// "bytes"}]}`.
std::string export_document_list_json(std::span<const Document> documents);

}  // namespace textlens

#endif  // TEXTLENS_INGEST_H_
