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

#ifndef TEXTLENS_STRINGS_H_
#define TEXTLENS_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace textlens {

// ASCII whitespace only.
std::string_view trim(std::string_view s);

// Splits on '\n', dropping a trailing '\r' from each line. A final empty
// line after a terminating newline is not returned.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view s, char delimiter);

// Splits on runs of ASCII whitespace.
std::vector<std::string_view> split_whitespace(std::string_view s);

// Shortest representation that round-trips, e.g. "0.5", "13.862943611198906".
std::string format_double(double value);

template <typename Range>
std::string join(const Range& parts, std::string_view separator) {
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out.append(separator);
    out.append(p);
    first = false;
  }
  return out;
}

}  // namespace textlens

#endif  // TEXTLENS_STRINGS_H_
