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

#include "textlens/csv.h"

#include "textlens/error.h"

namespace textlens::csv {

std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  std::size_t i = 0;
  std::size_t line = 1;
  bool at_field_start = true;
  bool row_has_content = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    at_field_start = true;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (at_field_start && c == '"') {
      // Quoted field.
      ++i;
      const std::size_t open_line = line;
      bool closed = false;
      while (i < text.size()) {
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        if (text[i] == '\n') ++line;
        field.push_back(text[i++]);
      }
      if (!closed) {
        throw Error(ErrorCode::kCsvParseError,
                    "unterminated quoted field starting on line " +
                        std::to_string(open_line));
      }
      row_has_content = true;
      if (i < text.size() && text[i] != ',' && text[i] != '\n' &&
          !(text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') &&
          text[i] != '\r') {
        throw Error(ErrorCode::kCsvParseError,
                    "unexpected character after closing quote on line " +
                        std::to_string(line));
      }
      at_field_start = false;
      continue;
    }
    if (c == ',') {
      end_field();
      row_has_content = true;
      ++i;
      continue;
    }
    if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      ++line;
      if (row_has_content || !field.empty() || !row.empty()) {
        end_row();
      } else {
        at_field_start = true;  // blank line
      }
      continue;
    }
    if (c == '"') {
      throw Error(ErrorCode::kCsvParseError,
                  "quote inside unquoted field on line " + std::to_string(line));
    }
    field.push_back(c);
    row_has_content = true;
    at_field_start = false;
    ++i;
  }
  if (row_has_content || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.append(escape(fields[i]));
  }
  out.push_back('\n');
}

}  // namespace textlens::csv
