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

#include "textlens/ingest.h"

#include <mutex>
#include <unordered_set>

#include <unicode/uchar.h>

#include "json.hpp"
#include "textlens/csv.h"
#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {
namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

std::string decode_text(std::string_view bytes) {
  if (bytes.substr(0, kBom.size()) == kBom) bytes.remove_prefix(kBom.size());
  if (!unicode::is_valid_utf8(bytes)) {
    throw Error(ErrorCode::kDecodeError, "input is not valid UTF-8");
  }
  std::string text;
  text.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] == '\r') {
      text.push_back('\n');
      if (i + 1 < bytes.size() && bytes[i + 1] == '\n') ++i;
    } else {
      text.push_back(bytes[i]);
    }
  }
  return unicode::to_nfc(text);
}

const std::unordered_set<char32_t>& vietnamese_letters() {
  static const auto* letters = [] {
    auto* set = new std::unordered_set<char32_t>();
    const std::string_view all =
        "ăâđêôơư"
        "áàảãạ" "ắằẳẵặ" "ấầẩẫậ"
        "éèẻẽẹ" "ếềểễệ"
        "íìỉĩị"
        "óòỏõọ" "ốồổỗộ" "ớờởỡợ"
        "úùủũụ" "ứừửữự"
        "ýỳỷỹỵ";
    std::size_t i = 0;
    while (i < all.size()) set->insert(unicode::next_code_point(all, i));
    return set;
  }();
  return *letters;
}

}  // namespace

std::string_view source_name(Source source) {
  switch (source) {
    case Source::kPlainTextFile: return "plain_text_file";
    case Source::kCsvCell: return "csv_cell";
    case Source::kDirectInput: return "direct_input";
  }
  return "plain_text_file";
}

Document load_plain_text(std::string_view bytes, Source source) {
  Document doc;
  doc.raw_text = decode_text(bytes);
  doc.source = source;
  return doc;
}

std::vector<Document> load_csv(std::string_view bytes,
                               std::string_view text_column) {
  const std::string text = decode_text(bytes);
  const std::vector<csv::Row> rows = csv::parse(text);
  if (rows.empty()) {
    throw Error(ErrorCode::kCsvParseError, "CSV has no header row");
  }
  const csv::Row& header = rows.front();
  std::optional<std::size_t> column;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == text_column) {
      column = c;
      break;
    }
  }
  if (!column && text_column.size() > 1 && text_column.front() == '#') {
    try {
      const std::size_t index = std::stoul(std::string(text_column.substr(1)));
      if (index < header.size()) column = index;
    } catch (const std::exception&) {
    }
  }
  if (!column) {
    throw Error(ErrorCode::kColumnNotFound,
                "no column named '" + std::string(text_column) + "'");
  }

  std::vector<Document> docs;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (*column >= rows[r].size()) continue;
    const std::string& cell = rows[r][*column];
    if (trim(cell).empty()) continue;
    Document doc;
    doc.raw_text = cell;
    doc.source = Source::kCsvCell;
    doc.column_label = header[*column];
    docs.push_back(std::move(doc));
  }
  return docs;
}

bool is_vietnamese_specific(char32_t cp) {
  const auto lower = static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
  return vietnamese_letters().count(lower) > 0;
}

LanguageDetector::LanguageDetector(WordList vietnamese_stopwords,
                                   WordList english_stopwords)
    : vietnamese_stopwords_(std::move(vietnamese_stopwords)),
      english_stopwords_(std::move(english_stopwords)) {}

LanguageDetector::Scores LanguageDetector::score(std::string_view text) const {
  Scores scores;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    const std::string folded = unicode::fold_case(word);
    if (vietnamese_stopwords_.contains(folded)) scores.vietnamese += 2;
    if (english_stopwords_.contains(folded)) scores.english += 2;
    word.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const char32_t cp = unicode::next_code_point(text, i);
    if (unicode::classify(cp) == unicode::CharClass::kLetter) {
      if (unicode::is_alphabetic(cp)) scores.has_letters = true;
      if (is_vietnamese_specific(cp)) ++scores.vietnamese;
      word.append(text.substr(start, i - start));
    } else {
      flush();
    }
  }
  flush();
  return scores;
}

Language LanguageDetector::detect(std::string_view text) const {
  const Scores s = score(text);
  if (!s.has_letters) return Language::kUnknown;
  if (s.vietnamese == 0 && s.english == 0) return Language::kEnglish;
  return s.vietnamese >= s.english ? Language::kVietnamese : Language::kEnglish;
}

CorpusSnapshot::CorpusSnapshot()
    : documents_(std::make_shared<const std::vector<Document>>()) {}

CorpusSnapshot::CorpusSnapshot(
    std::shared_ptr<const std::vector<Document>> documents,
    std::uint64_t version)
    : documents_(std::move(documents)), version_(version) {}

namespace {

Language routed(Language language) {
  return language == Language::kVietnamese ? language : Language::kEnglish;
}

}  // namespace

Language dominant_language(std::span<const Document> documents) {
  std::size_t vietnamese = 0;
  for (const Document& d : documents) {
    if (routed(d.language) == Language::kVietnamese) ++vietnamese;
  }
  return 2 * vietnamese >= documents.size() ? Language::kVietnamese
                                            : Language::kEnglish;
}

std::vector<Document> documents_in_language(std::span<const Document> documents,
                                            Language language) {
  std::vector<Document> out;
  for (const Document& d : documents) {
    if (routed(d.language) == routed(language)) out.push_back(d);
  }
  return out;
}

CorpusStats compute_stats(std::span<const Document> documents) {
  CorpusStats stats;
  for (const Document& doc : documents) {
    ++stats.documents[doc.language];
    stats.tokens[doc.language] += split_whitespace(doc.raw_text).size();
  }
  return stats;
}

Corpus::Corpus()
    : documents_(std::make_shared<const std::vector<Document>>()),
      created_at_(std::chrono::system_clock::now()) {}

std::string Corpus::add(Document doc) {
  std::vector<Document> one;
  one.push_back(std::move(doc));
  return add_all(std::move(one)).front();
}

std::vector<std::string> Corpus::add_all(std::vector<Document> docs) {
  std::unique_lock lock(mutex_);
  auto next = std::make_shared<std::vector<Document>>(*documents_);
  std::unordered_set<std::string> ids;
  for (const Document& d : *next) ids.insert(d.id);
  std::uint64_t next_id = next_id_;
  std::vector<std::string> assigned;
  std::size_t added_bytes = 0;
  for (Document& doc : docs) {
    if (doc.id.empty()) {
      do {
        doc.id = "doc-" + std::to_string(next_id++);
      } while (ids.count(doc.id));
    }
    if (!ids.insert(doc.id).second) {
      throw Error(ErrorCode::kInvalidInput, "duplicate document id " + doc.id);
    }
    added_bytes += doc.raw_text.size();
    assigned.push_back(doc.id);
    next->push_back(std::move(doc));
  }
  documents_ = std::move(next);
  next_id_ = next_id;
  total_bytes_ += added_bytes;
  ++version_;
  stats_cache_.reset();
  return assigned;
}

CorpusSnapshot Corpus::snapshot() const {
  std::shared_lock lock(mutex_);
  return CorpusSnapshot(documents_, version_);
}

std::size_t Corpus::size() const {
  std::shared_lock lock(mutex_);
  return documents_->size();
}

std::size_t Corpus::total_bytes() const {
  std::shared_lock lock(mutex_);
  return total_bytes_;
}

CorpusStats Corpus::stats() const {
  // Writers hold the exclusive lock, so the cache is only touched under it.
  std::unique_lock lock(mutex_);
  if (!stats_cache_) stats_cache_ = compute_stats(*documents_);
  return *stats_cache_;
}

std::string export_corpus_json(const CorpusSnapshot& snapshot) {
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (const Document& d : snapshot.documents()) {
    nlohmann::ordered_json j;
    j["id"] = d.id;
    j["language"] = language_code(d.language);
    j["source"] = source_name(d.source);
    j["text"] = d.raw_text;
    docs.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["documents"] = std::move(docs);
  return root.dump();
}

std::string export_document_list_json(std::span<const Document> documents) {
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (const Document& d : documents) {
    nlohmann::ordered_json j;
    j["id"] = d.id;
    j["language"] = language_code(d.language);
    j["source"] = source_name(d.source);
    j["bytes"] = d.raw_text.size();
    docs.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["documents"] = std::move(docs);
  return root.dump();
}

}  // namespace textlens
