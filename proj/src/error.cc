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

#include "textlens/error.h"

namespace textlens {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDecodeError: return "decode_error";
    case ErrorCode::kCsvParseError: return "csv_parse_error";
    case ErrorCode::kColumnNotFound: return "column_not_found";
    case ErrorCode::kInvalidInput: return "invalid_input";
    case ErrorCode::kMixedLanguage: return "mixed_language";
    case ErrorCode::kSpanMismatch: return "span_mismatch";
    case ErrorCode::kEmptyInput: return "empty_input";
    case ErrorCode::kInvalidThresholds: return "invalid_thresholds";
    case ErrorCode::kBackendUnavailable: return "backend_unavailable";
    case ErrorCode::kSchemaError: return "schema_error";
    case ErrorCode::kUnknownAspect: return "unknown_aspect";
    case ErrorCode::kGenerationTimeout: return "generation_timeout";
    case ErrorCode::kQueryNotFound: return "query_not_found";
    case ErrorCode::kPathNotFound: return "path_not_found";
    case ErrorCode::kGoldFormatError: return "gold_format_error";
    case ErrorCode::kConfigError: return "config_error";
    case ErrorCode::kIoError: return "io_error";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kPayloadTooLarge: return "payload_too_large";
  }
  return "unknown";
}

}  // namespace textlens
