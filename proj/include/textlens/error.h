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

#ifndef TEXTLENS_ERROR_H_
#define TEXTLENS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace textlens {

// Every failure raised by the library carries one of these codes. The
// service maps them onto HTTP statuses and `{error:{code,message}}` bodies.
enum class ErrorCode {
  kDecodeError,
  kCsvParseError,
  kColumnNotFound,
  kInvalidInput,
  kMixedLanguage,
  kSpanMismatch,
  kEmptyInput,
  kInvalidThresholds,
  kBackendUnavailable,
  kSchemaError,
  kUnknownAspect,
  kGenerationTimeout,
  kQueryNotFound,
  kPathNotFound,
  kGoldFormatError,
  kConfigError,
  kIoError,
  kNotFound,
  kPayloadTooLarge,
};

// Stable snake_case name, e.g. "decode_error".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace textlens

#endif  // TEXTLENS_ERROR_H_
