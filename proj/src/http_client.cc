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

#include "textlens/http_client.h"

#include <charconv>

#include "httplib.h"
#include "textlens/error.h"

namespace textlens::http {

Url parse_url(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  auto bad = [&] {
    return Error(ErrorCode::kInvalidInput,
                 "endpoint '" + std::string(url) +
                     "' must look like http://host[:port][/path]");
  };
  if (url.substr(0, kScheme.size()) != kScheme) throw bad();
  std::string_view rest = url.substr(kScheme.size());
  Url out;
  const std::size_t slash = rest.find('/');
  std::string_view authority = rest.substr(0, slash);
  if (slash != std::string_view::npos) out.path = std::string(rest.substr(slash));
  const std::size_t colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    std::string_view port = authority.substr(colon + 1);
    auto [ptr, ec] =
        std::from_chars(port.data(), port.data() + port.size(), out.port);
    if (ec != std::errc() || ptr != port.data() + port.size() || out.port <= 0 ||
        out.port > 65535) {
      throw bad();
    }
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) throw bad();
  out.host = std::string(authority);
  return out;
}

Response post_json(const Url& url, const std::string& body,
                   std::chrono::milliseconds timeout) {
  httplib::Client client(url.host, url.port);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const auto start = std::chrono::steady_clock::now();
  auto result = client.Post(url.path, body, "application/json");
  if (!result) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const httplib::Error error = result.error();
    // A read timeout surfaces as a plain read error; elapsed time tells
    // them apart.
    const bool timed_out = error == httplib::Error::ConnectionTimeout ||
                           elapsed >= timeout;
    throw TransportError(httplib::to_string(error), timed_out);
  }
  return {result->status, result->body};
}

}  // namespace textlens::http
