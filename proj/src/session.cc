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


#include "textlens/session.h"

#include <cstdio>
#include <random>
#include <vector>

#include "textlens/error.h"

namespace textlens {

std::shared_ptr<const SegmentedCorpus> Session::segmented(
    const CorpusSnapshot& snapshot,
    const std::function<SegmentedCorpus(const CorpusSnapshot&)>& build) {
  std::lock_guard lock(cache_mutex_);
  if (!cached_ || cached_version_ != snapshot.version()) {
    cached_ = std::make_shared<const SegmentedCorpus>(build(snapshot));
    cached_version_ = snapshot.version();
  }
  return cached_;
}

SessionStore::SessionStore(std::chrono::seconds idle_timeout, Clock clock)
    : idle_timeout_(idle_timeout), clock_(std::move(clock)) {
  if (!clock_) clock_ = [] { return std::chrono::steady_clock::now(); };
}

SessionStore::~SessionStore() { stop_janitor(); }

std::string SessionStore::create() {
  static thread_local std::random_device device;
  char id[33];
  std::snprintf(id, sizeof id, "%08x%08x%08x%08x", device(), device(),
                device(), device());
  std::lock_guard lock(mutex_);
  sessions_[id] = {std::make_shared<Session>(id), clock_()};
  return id;
}

bool SessionStore::expired(const Entry& e,
                           std::chrono::steady_clock::time_point now) const {
  return now - e.last_access > idle_timeout_;
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) {
  std::shared_ptr<Session> dropped;  // released outside the lock
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it != sessions_.end()) {
    const auto now = clock_();
    if (!expired(it->second, now)) {
      it->second.last_access = now;
      return it->second.session;
    }
    dropped = std::move(it->second.session);
    sessions_.erase(it);
  }
  throw Error(ErrorCode::kNotFound, "no session '" + id + "'");
}

bool SessionStore::remove(const std::string& id) {
  std::shared_ptr<Session> dropped;
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return false;
  dropped = std::move(it->second.session);
  sessions_.erase(it);
  return true;
}

std::size_t SessionStore::purge_expired() {
  std::vector<std::shared_ptr<Session>> dropped;
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (expired(it->second, now)) {
      dropped.push_back(std::move(it->second.session));
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
  return dropped.size();
}

std::size_t SessionStore::live_sessions() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionStore::start_janitor(std::chrono::milliseconds interval) {
  stop_janitor();
  {
    std::lock_guard lock(janitor_mutex_);
    janitor_stop_ = false;
  }
  janitor_ = std::thread([this, interval] {
    std::unique_lock lock(janitor_mutex_);
    while (!janitor_cv_.wait_for(lock, interval, [this] { return janitor_stop_; })) {
      lock.unlock();
      purge_expired();
      lock.lock();
    }
  });
}

void SessionStore::stop_janitor() {
  {
    std::lock_guard lock(janitor_mutex_);
    janitor_stop_ = true;
  }
  janitor_cv_.notify_all();
  if (janitor_.joinable()) janitor_.join();
}

}  // namespace textlens
