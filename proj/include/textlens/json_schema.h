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


// Validation against the subset of JSON Schema used by the shipped config
// schema: type, enum, properties, additionalProperties (boolean), required,
// numeric bounds, minLength, items, minItems, maxItems and local $ref.

#ifndef TEXTLENS_JSON_SCHEMA_H_
#define TEXTLENS_JSON_SCHEMA_H_

#include <optional>
#include <string>

#include "json.hpp"

namespace textlens {

struct SchemaViolation {
  std::string path;  // dotted, "[i]" for array items, empty for the root
  std::string reason;
};

// The first violation, or nullopt when valid. Object members are visited in
// key order. Throws kConfigError for schema keywords outside the subset.
std::optional<SchemaViolation> schema_violation(const nlohmann::json& schema,
                                            const nlohmann::json& instance);

}  // namespace textlens

#endif  // TEXTLENS_JSON_SCHEMA_H_
