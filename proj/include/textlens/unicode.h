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

// UTF-8 helpers backed by ICU. All strings in the library are UTF-8 and,
// once ingested, NFC-normalised.

#ifndef TEXTLENS_UNICODE_H_
#define TEXTLENS_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace textlens::unicode {

enum class CharClass { kSpace, kLetter, kDigit, kPunct };

bool is_valid_utf8(std::string_view text);

// Canonical composition. Input must be valid UTF-8.
std::string to_nfc(std::string_view text);

// Full Unicode lowercase (root locale). Diacritics are preserved.
std::string fold_case(std::string_view text);

// Decodes the code point starting at byte offset `i` and advances `i` past
// it. Malformed bytes decode as U+FFFD and advance by one byte.
char32_t next_code_point(std::string_view text, std::size_t& i);

std::size_t count_code_points(std::string_view text);

std::string encode(char32_t cp);

// Splits into one string per code point.
std::vector<std::string> split_code_points(std::string_view text);

// Letters include combining marks so decomposed input still forms one run.
CharClass classify(char32_t cp);

bool is_upper(char32_t cp);

bool is_alphabetic(char32_t cp);

// Maps a byte offset to a code point offset. `byte_offset` must lie on a
// code point boundary.
class OffsetMap {
 public:
  explicit OffsetMap(std::string_view text);

  std::size_t to_code_points(std::size_t byte_offset) const;

 private:
  std::vector<std::size_t> prefix_;  // code points before each byte
};

}  // namespace textlens::unicode

#endif  // TEXTLENS_UNICODE_H_
