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


#include "textlens/json_schema.h"

#include <set>
#include <string_view>

#include "textlens/error.h"

namespace textlens {
namespace {

using nlohmann::json;

const std::set<std::string_view> kSupported = {
    "$schema", "$id",       "$defs",    "title",           "description",
    "$ref",    "type",      "enum",     "properties",      "additionalProperties",
    "required", "minimum",  "maximum",  "exclusiveMinimum", "exclusiveMaximum",
    "minLength", "items",   "minItems", "maxItems"};

bool has_type(const json& value, std::string_view type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "number") return value.is_number();
  if (type == "integer") {
    if (value.is_number_integer()) return true;
    return value.is_number_float() &&
           value.get<double>() == static_cast<double>(static_cast<long long>(
                                      value.get<double>()));
  }
  throw Error(ErrorCode::kConfigError,
              "schema uses unknown type '" + std::string(type) + "'");
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  std::optional<SchemaViolation> check(const json& schema, const json& value,
                                   const std::string& path) const {
    for (const auto& [keyword, _] : schema.items()) {
      if (!kSupported.count(keyword)) {
        throw Error(ErrorCode::kConfigError,
                    "schema keyword '" + keyword + "' is not supported");
      }
    }
    auto fail = [&](const std::string& why) {
      return std::optional<SchemaViolation>({path, why});
    };

    if (auto ref = schema.find("$ref"); ref != schema.end()) {
      return check(resolve(ref->get<std::string>()), value, path);
    }
    if (auto type = schema.find("type"); type != schema.end()) {
      bool ok = false;
      std::string names;
      for (const json& t : type->is_array() ? *type : json::array({*type})) {
        ok = ok || has_type(value, t.get<std::string>());
        names += (names.empty() ? "" : " or ") + t.get<std::string>();
      }
      if (!ok) return fail("expected " + names);
    }
    if (auto e = schema.find("enum"); e != schema.end()) {
      bool ok = false;
      for (const json& option : *e) ok = ok || option == value;
      if (!ok) return fail("must be one of " + e->dump());
    }
    if (value.is_number()) {
      const double x = value.get<double>();
      auto bound = [&](const char* key) -> std::optional<double> {
        auto it = schema.find(key);
        if (it == schema.end()) return std::nullopt;
        return it->get<double>();
      };
      auto num = [](double v) { return json(v).dump(); };
      if (auto b = bound("minimum"); b && x < *b) return fail("must be >= " + num(*b));
      if (auto b = bound("maximum"); b && x > *b) return fail("must be <= " + num(*b));
      if (auto b = bound("exclusiveMinimum"); b && x <= *b) return fail("must be > " + num(*b));
      if (auto b = bound("exclusiveMaximum"); b && x >= *b) return fail("must be < " + num(*b));
    }
    if (value.is_string()) {
      if (auto m = schema.find("minLength"); m != schema.end()) {
        // Counted in bytes; only the zero/non-zero distinction is used.
        if (value.get<std::string>().size() < m->get<std::size_t>()) {
          return fail("must not be shorter than " + m->dump());
        }
      }
    }
    if (value.is_array()) {
      if (auto m = schema.find("minItems"); m != schema.end() && value.size() < m->get<std::size_t>()) {
        return fail("needs at least " + m->dump() + " items");
      }
      if (auto m = schema.find("maxItems"); m != schema.end() && value.size() > m->get<std::size_t>()) {
        return fail("allows at most " + m->dump() + " items");
      }
      if (auto items = schema.find("items"); items != schema.end()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (auto v = check(*items, value[i], path + "[" + std::to_string(i) + "]")) return v;
        }
      }
    }
    if (value.is_object()) {
      if (auto req = schema.find("required"); req != schema.end()) {
        for (const json& key : *req) {
          if (!value.contains(key.get<std::string>())) {
            return std::optional<SchemaViolation>(
                {child(path, key.get<std::string>()), "required key is missing"});
          }
        }
      }
      const json empty = json::object();
      auto props_it = schema.find("properties");
      const json& props = props_it == schema.end() ? empty : *props_it;
      auto extra = schema.find("additionalProperties");
      const bool closed = extra != schema.end() && extra->is_boolean() && !extra->get<bool>();
      for (const auto& [key, member] : value.items()) {
        auto p = props.find(key);
        if (p == props.end()) {
          if (closed) {
            return std::optional<SchemaViolation>({child(path, key), "unknown key"});
          }
          continue;
        }
        if (auto v = check(*p, member, child(path, key))) return v;
      }
    }
    return std::nullopt;
  }

 private:
  const json& resolve(const std::string& ref) const {
    constexpr std::string_view kPrefix = "#/$defs/";
    if (ref.rfind(kPrefix, 0) == 0) {
      const auto defs = root_.find("$defs");
      if (defs != root_.end()) {
        auto it = defs->find(ref.substr(kPrefix.size()));
        if (it != defs->end()) return *it;
      }
    }
    throw Error(ErrorCode::kConfigError, "unresolvable schema $ref '" + ref + "'");
  }

  const json& root_;
};

}  // namespace

std::optional<SchemaViolation> schema_violation(const nlohmann::json& schema,
                                            const nlohmann::json& instance) {
  return Validator(schema).check(schema, instance, "");
}

}  // namespace textlens
