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

// RFC 4180 CSV: ',' delimiter, '"' quoting, CRLF or LF record separators.

#ifndef TEXTLENS_CSV_H_
#define TEXTLENS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace textlens::csv {

using Row = std::vector<std::string>;

// Throws kCsvParseError on an unterminated quoted field, a quote inside an
// unquoted field, or characters between a closing quote and the delimiter.
std::vector<Row> parse(std::string_view text);

// Quotes the field when it contains ',', '"', CR or LF.
std::string escape(std::string_view field);

// Appends one record terminated by '\n'.
void append_row(std::string& out, const std::vector<std::string>& fields);

}  // namespace textlens::csv

#endif  // TEXTLENS_CSV_H_
