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


// In-memory analysis sessions with idle expiry.

#ifndef TEXTLENS_SESSION_H_
#define TEXTLENS_SESSION_H_

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "textlens/concordance.h"
#include "textlens/ingest.h"

namespace textlens {

class Session {
 public:
  explicit Session(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  Corpus& corpus() { return corpus_; }
  const Corpus& corpus() const { return corpus_; }

  // Held while checking limits and appending so uploads apply atomically.
  std::mutex& upload_mutex() { return upload_mutex_; }

  // The segmentation of `snapshot`, built at most once per corpus version.
  // Concurrent callers for the same version share one build.
  std::shared_ptr<const SegmentedCorpus> segmented(
      const CorpusSnapshot& snapshot,
      const std::function<SegmentedCorpus(const CorpusSnapshot&)>& build);

 private:
  std::string id_;
  Corpus corpus_;
  std::mutex upload_mutex_;
  std::mutex cache_mutex_;
  std::uint64_t cached_version_ = 0;
  std::shared_ptr<const SegmentedCorpus> cached_;
};

class SessionStore {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit SessionStore(std::chrono::seconds idle_timeout, Clock clock = {});
  ~SessionStore();

  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  // Returns a fresh 128-bit hex id.
  std::string create();
  // Refreshes the idle timer. An expired session is purged first. Throws
  // kNotFound.
  std::shared_ptr<Session> get(const std::string& id);
  bool remove(const std::string& id);
  // Drops every session idle for longer than the timeout; returns how many.
  std::size_t purge_expired();
  std::size_t live_sessions() const;

  // Runs purge_expired every `interval` on a background thread until
  // stop_janitor or destruction.
  void start_janitor(std::chrono::milliseconds interval);
  void stop_janitor();

 private:
  struct Entry {
    std::shared_ptr<Session> session;
    std::chrono::steady_clock::time_point last_access;
  };

  bool expired(const Entry& e, std::chrono::steady_clock::time_point now) const;

  std::chrono::seconds idle_timeout_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> sessions_;

  std::mutex janitor_mutex_;
  std::condition_variable janitor_cv_;
  bool janitor_stop_ = false;
  std::thread janitor_;
};

}  // namespace textlens

#endif  // TEXTLENS_SESSION_H_
