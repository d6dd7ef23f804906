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

// Minimal JSON-over-HTTP POST used by the external classifier and generator
// clients. Plain http:// only.

#ifndef TEXTLENS_HTTP_CLIENT_H_
#define TEXTLENS_HTTP_CLIENT_H_

#include <chrono>
#include <stdexcept>
#include <string>
#include <string_view>

namespace textlens::http {

struct Url {
  std::string host;
  int port = 80;
  std::string path = "/";
};

// Throws kInvalidInput for anything but http://host[:port][/path].
Url parse_url(std::string_view url);

struct Response {
  int status = 0;
  std::string body;
};

// The request never reached a response: refused, reset or timed out.
class TransportError : public std::runtime_error {
 public:
  TransportError(const std::string& message, bool timed_out)
      : std::runtime_error(message), timed_out_(timed_out) {}
  bool timed_out() const { return timed_out_; }

 private:
  bool timed_out_;
};

Response post_json(const Url& url, const std::string& body,
                   std::chrono::milliseconds timeout);

}  // namespace textlens::http

#endif  // TEXTLENS_HTTP_CLIENT_H_
