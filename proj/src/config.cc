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


#include "textlens/config.h"

#include <cstdlib>

#include "json.hpp"
#include "textlens/error.h"
#include "textlens/http_client.h"
#include "textlens/json_schema.h"

namespace textlens {
namespace {

using nlohmann::json;

constexpr std::string_view kSchema =
#include "config_schema.inc"
    ;

Error config_error(const std::string& key, const std::string& why) {
  return Error(ErrorCode::kConfigError, "config key '" + key + "': " + why);
}

// Looks up a dotted path; null when any step is absent.
const json* at(const json& root, std::string_view dotted) {
  const json* node = &root;
  while (!dotted.empty()) {
    const std::size_t dot = dotted.find('.');
    const std::string key(dotted.substr(0, dot));
    auto it = node->find(key);
    if (it == node->end()) return nullptr;
    node = &*it;
    dotted = dot == std::string_view::npos ? "" : dotted.substr(dot + 1);
  }
  return node;
}

template <typename T>
void read(const json& root, std::string_view key, T& out) {
  if (const json* v = at(root, key)) out = v->get<T>();
}

void read_path(const json& root, std::string_view key,
               const std::filesystem::path& base, std::filesystem::path& out) {
  if (const json* v = at(root, key)) out = base / v->get<std::string>();
}

void read_language(const json& root, const std::string& prefix,
                   const std::filesystem::path& base, LanguagePaths& out) {
  read_path(root, prefix + ".stopwords", base, out.stopwords);
  read_path(root, prefix + ".abbreviations", base, out.abbreviations);
  read_path(root, prefix + ".lexicon", base, out.lexicon);
  read_path(root, prefix + ".reference", base, out.reference);
  read_path(root, prefix + ".bpe", base, out.bpe);
}

std::string checked_endpoint(const json& root, const std::string& key) {
  const std::string endpoint = at(root, key)->get<std::string>();
  try {
    http::parse_url(endpoint);
  } catch (const Error& e) {
    throw config_error(key, e.what());
  }
  return endpoint;
}

std::chrono::milliseconds millis(const json& root, std::string_view key,
                                 std::chrono::milliseconds fallback) {
  const json* v = at(root, key);
  return v ? std::chrono::milliseconds(v->get<std::int64_t>()) : fallback;
}

}  // namespace

std::string_view service_config_schema() { return kSchema; }

ServiceConfig parse_service_config(std::string_view json_text,
                                   const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfigError,
                std::string("config is not valid JSON: ") + e.what());
  }
  static const json schema = json::parse(kSchema);
  if (auto violation = schema_violation(schema, root)) {
    throw config_error(violation->path.empty() ? "(root)" : violation->path,
                       violation->reason);
  }

  ServiceConfig c;
  read(root, "bind.host", c.host);
  read(root, "bind.port", c.port);
  read(root, "bind.threads", c.threads);

  if (const json* dir = at(root, "resources.data_dir")) {
    c.resources = ResourcePaths::from_data_dir(base_dir / dir->get<std::string>());
  }
  read_path(root, "resources.dictionary", base_dir, c.resources.dictionary);
  read_path(root, "resources.aspects", base_dir, c.resources.aspects);
  read_path(root, "resources.thesaurus", base_dir, c.resources.thesaurus);
  read_language(root, "resources.vi", base_dir, c.resources.vietnamese);
  read_language(root, "resources.en", base_dir, c.resources.english);

  if (const json* v = at(root, "segmenter")) {
    c.segmenter = parse_segmenter_kind(v->get<std::string>());
  }
  if (const json* v = at(root, "wordcloud.mode")) {
    c.cloud_mode = parse_cloud_mode(v->get<std::string>());
  }
  read(root, "wordcloud.top_k", c.top_k);
  read(root, "wordcloud.min_count", c.min_count);

  read(root, "concordance.window", c.window);
  read(root, "concordance.max_depth", c.tree.max_depth);
  read(root, "concordance.min_branch_count", c.tree.min_branch_count);

  if (const json* v = at(root, "summary.target")) {
    try {
      c.summary_target = SummaryTarget::parse(v->get<std::string>());
    } catch (const Error& e) {
      throw config_error("summary.target", e.what());
    }
  }
  read(root, "summary.damping", c.textrank.damping);
  read(root, "summary.epsilon", c.textrank.epsilon);
  read(root, "summary.max_iterations", c.textrank.max_iterations);

  if (const json* v = at(root, "sentiment.granularity")) {
    c.granularity = parse_granularity(v->get<std::string>());
  }
  if (const json* v = at(root, "sentiment.thresholds")) {
    for (std::size_t i = 0; i < 4; ++i) c.thresholds.cuts[i] = (*v)[i].get<double>();
    try {
      c.thresholds.validate();
    } catch (const Error& e) {
      throw config_error("sentiment.thresholds", e.what());
    }
  }
  read(root, "sentiment.saturation", c.saturation);
  if (at(root, "sentiment.classifier")) {
    ExternalClassifierOptions o;
    o.endpoint = checked_endpoint(root, "sentiment.classifier.endpoint");
    o.timeout = millis(root, "sentiment.classifier.timeout_ms", o.timeout);
    read(root, "sentiment.classifier.batch_size", o.batch_size);
    read(root, "sentiment.classifier.max_in_flight", o.max_in_flight);
    c.classifier = o;
  }

  if (at(root, "generation.endpoint")) {
    GenerationClientOptions o;
    o.endpoint = checked_endpoint(root, "generation.endpoint");
    o.timeout = millis(root, "generation.timeout_ms", o.timeout);
    read(root, "generation.temperature", o.temperature);
    read(root, "generation.retries", o.retries);
    c.generator = o;
  }
  read(root, "generation.max_length", c.max_length);
  read(root, "generation.aspect_saturation", c.aspect_saturation);

  if (const json* v = at(root, "sessions.idle_timeout_s")) {
    c.idle_timeout = std::chrono::seconds(v->get<std::int64_t>());
  }
  if (const json* v = at(root, "sessions.janitor_interval_s")) {
    c.janitor_interval = std::chrono::seconds(v->get<std::int64_t>());
  }
  read(root, "sessions.max_document_bytes", c.max_document_bytes);
  read(root, "sessions.max_session_bytes", c.max_session_bytes);
  return c;
}

ServiceConfig load_service_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  try {
    return parse_service_config(text, path.parent_path());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::filesystem::path resolve_config_path(
    const std::optional<std::filesystem::path>& explicit_path) {
  if (explicit_path) return *explicit_path;
  if (const char* env = std::getenv(std::string(kConfigEnvVar).c_str());
      env != nullptr && *env != '\0') {
    return env;
  }
  throw Error(ErrorCode::kConfigError,
              "no config file: pass --config or set " +
                  std::string(kConfigEnvVar));
}

}  // namespace textlens
