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


#ifndef TEXTLENS_CONFIG_H_
#define TEXTLENS_CONFIG_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "textlens/abstractive.h"
#include "textlens/concordance.h"
#include "textlens/keyness.h"
#include "textlens/resources.h"
#include "textlens/segment.h"
#include "textlens/sentiment.h"
#include "textlens/textrank.h"

namespace textlens {

inline constexpr std::string_view kConfigEnvVar = "FREETXT_CONFIG";

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  int threads = 8;

  ResourcePaths resources = ResourcePaths::from_data_dir(default_data_dir());
  SegmenterKind segmenter = SegmenterKind::kHybrid;

  CloudMode cloud_mode = CloudMode::kKeyness;
  std::size_t top_k = 50;
  std::int64_t min_count = 2;

  std::size_t window = kDefaultWindow;
  WordTreeOptions tree;

  SummaryTarget summary_target = SummaryTarget::fraction(0.3);
  TextRankOptions textrank;

  Granularity granularity = Granularity::kPerSentence;
  Thresholds thresholds;
  double saturation = kDefaultSaturation;
  std::optional<ExternalClassifierOptions> classifier;

  // Set only when an endpoint is configured; the other fields still apply.
  std::optional<GenerationClientOptions> generator;
  std::size_t max_length = 256;
  double aspect_saturation = kAspectSaturation;

  std::chrono::seconds idle_timeout{3600};
  std::chrono::seconds janitor_interval{60};
  std::size_t max_document_bytes = 10u << 20;
  std::size_t max_session_bytes = 50u << 20;
};

// The published schema, config/schema.json, compiled in.
std::string_view service_config_schema();

// Validates against the schema, then applies the values over the defaults.
// Relative paths resolve against `base_dir`. Throws kConfigError naming the
// offending key.
ServiceConfig parse_service_config(std::string_view json_text,
                                   const std::filesystem::path& base_dir);
ServiceConfig load_service_config(const std::filesystem::path& path);

// `explicit_path` when given, else $FREETXT_CONFIG. Throws kConfigError when
// neither is set.
std::filesystem::path resolve_config_path(
    const std::optional<std::filesystem::path>& explicit_path);

}  // namespace textlens

#endif  // TEXTLENS_CONFIG_H_
