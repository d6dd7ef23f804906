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


// HTTP JSON API over session corpora. Every analysis response body is the
// corresponding module export, unchanged.

#ifndef TEXTLENS_SERVICE_H_
#define TEXTLENS_SERVICE_H_

#include <memory>
#include <string_view>
#include <thread>

#include "textlens/config.h"
#include "textlens/error.h"
#include "textlens/resources.h"
#include "textlens/session.h"

namespace httplib {
class Server;
}

namespace textlens {

std::string_view service_version();

// HTTP status for an error code.
int http_status(ErrorCode code);
// `{"error":{"code","message"}}`
std::string error_body(std::string_view code, std::string_view message);

class Service {
 public:
  Service(ServiceConfig config, std::shared_ptr<const Resources> resources,
          SessionStore::Clock clock = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the configured address (port 0 picks a free one), starts the
  // session janitor and serves on a background thread. Returns the port.
  // Throws kIoError when the address cannot be bound.
  int start();
  void wait();
  void stop();

  SessionStore& sessions() { return sessions_; }
  const ServiceConfig& config() const { return config_; }
  const Segmenter& segmenter() const { return segmenter_; }

 private:
  void install_routes();
  std::shared_ptr<const SegmentedCorpus> segmented(Session& session,
                                                   const CorpusSnapshot& snapshot) const;

  ServiceConfig config_;
  std::shared_ptr<const Resources> resources_;
  Segmenter segmenter_;
  LanguageDetector detector_;
  SessionStore sessions_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace textlens

#endif  // TEXTLENS_SERVICE_H_
