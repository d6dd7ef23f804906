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

#include "textlens/text.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "textlens/error.h"
#include "textlens/strings.h"
#include "textlens/unicode.h"

namespace textlens {

std::string_view language_code(Language language) {
  switch (language) {
    case Language::kVietnamese: return "vi";
    case Language::kEnglish: return "en";
    case Language::kUnknown: return "unknown";
  }
  return "unknown";
}

Language parse_language(std::string_view code) {
  const std::string folded = unicode::fold_case(code);
  if (folded == "vi" || folded == "vietnamese") return Language::kVietnamese;
  if (folded == "en" || folded == "english") return Language::kEnglish;
  throw Error(ErrorCode::kInvalidInput,
              "unknown language '" + std::string(code) + "'");
}

WordList::WordList(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(unicode::fold_case(unicode::to_nfc(w)));
}

WordList WordList::parse(std::string_view text) {
  std::vector<std::string> words;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    words.emplace_back(line);
  }
  return WordList(std::move(words));
}

WordList WordList::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::vector<std::string> WordList::sorted() const {
  std::vector<std::string> out(words_.begin(), words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace textlens
