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

// Core value types shared by every analysis module.

#ifndef TEXTLENS_TEXT_H_
#define TEXTLENS_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace textlens {

enum class Language { kVietnamese, kEnglish, kUnknown };

// "vi", "en" or "unknown".
std::string_view language_code(Language language);

// Accepts "vi"/"vietnamese" and "en"/"english" (any case); anything else
// throws kInvalidInput.
Language parse_language(std::string_view code);

// Half-open [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Token {
  // Vietnamese multi-syllable words join their syllables with one space.
  std::string surface;
  Span span;       // code point offsets into the source
  Span byte_span;  // byte offsets into the source
  std::optional<std::vector<std::string>> subwords;
  bool is_word = true;  // false for punctuation and digit runs
};

struct SegmentedText {
  std::vector<Token> tokens;
  Language language = Language::kUnknown;
};

// A case-folded term set loaded from a one-entry-per-line file. Blank lines
// and lines starting with '#' are skipped.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::vector<std::string> words);

  static WordList parse(std::string_view text);
  static WordList load(const std::filesystem::path& path);

  // `term` must already be case-folded.
  bool contains(std::string_view term) const {
    return words_.find(std::string(term)) != words_.end();
  }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  // Sorted copy of the entries.
  std::vector<std::string> sorted() const;

 private:
  std::unordered_set<std::string> words_;
};

// Reads a whole file as bytes; throws kIoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace textlens

#endif  // TEXTLENS_TEXT_H_
