#pragma once

// Minimal JSON-schema checker for the subset used by docs/report.schema.json:
// type, const, enum, required, properties, items, minItems/maxItems, minimum,
// pattern, oneOf, allOf, $ref into #/definitions. Test-only.

#include <regex>
#include <string>

#include <nlohmann/json.hpp>

namespace meshdom::test {

class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json schema) : root_(std::move(schema)) {}

  bool validate(const nlohmann::json& value, std::string* why = nullptr) const {
    std::string local;
    bool ok = check(root_, value, why ? *why : local);
    return ok;
  }

 private:
  nlohmann::json root_;

  const nlohmann::json& resolve(const nlohmann::json& schema) const {
    if (schema.contains("$ref")) {
      std::string ref = schema["$ref"].get<std::string>();
      const std::string prefix = "#/definitions/";
      if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
      return root_.at("definitions").at(ref.substr(prefix.size()));
    }
    return schema;
  }

  static bool type_matches(const std::string& type, const nlohmann::json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (type == "number") return v.is_number();
    throw std::runtime_error("unsupported type " + type);
  }

  bool check(const nlohmann::json& schema_in, const nlohmann::json& v,
             std::string& why) const {
    const nlohmann::json& schema = resolve(schema_in);

    if (schema.contains("type")) {
      const auto& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = type_matches(t.get<std::string>(), v);
      } else {
        for (const auto& alt : t)
          if (type_matches(alt.get<std::string>(), v)) ok = true;
      }
      if (!ok) {
        why = "type mismatch at " + v.dump().substr(0, 60);
        return false;
      }
    }
    if (schema.contains("const") && v != schema["const"]) {
      why = "const mismatch: " + v.dump();
      return false;
    }
    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& alt : schema["enum"])
        if (v == alt) found = true;
      if (!found) {
        why = "enum mismatch: " + v.dump();
        return false;
      }
    }
    if (schema.contains("minimum") && v.is_number() &&
        v.get<double>() < schema["minimum"].get<double>()) {
      why = "below minimum: " + v.dump();
      return false;
    }
    if (schema.contains("pattern") && v.is_string()) {
      std::regex re(schema["pattern"].get<std::string>());
      if (!std::regex_search(v.get<std::string>(), re)) {
        why = "pattern mismatch: " + v.dump();
        return false;
      }
    }
    if (v.is_object()) {
      if (schema.contains("required"))
        for (const auto& key : schema["required"])
          if (!v.contains(key.get<std::string>())) {
            why = "missing required key " + key.get<std::string>();
            return false;
          }
      if (schema.contains("properties"))
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
          if (v.contains(it.key()) && !check(it.value(), v.at(it.key()), why)) {
            why = "at ." + it.key() + ": " + why;
            return false;
          }
    }
    if (v.is_array()) {
      if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>()) {
        why = "too few items";
        return false;
      }
      if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>()) {
        why = "too many items";
        return false;
      }
      if (schema.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!check(schema["items"], v[i], why)) {
            why = "at [" + std::to_string(i) + "]: " + why;
            return false;
          }
    }
    if (schema.contains("allOf"))
      for (const auto& sub : schema["allOf"])
        if (!check(sub, v, why)) return false;
    if (schema.contains("oneOf")) {
      int matches = 0;
      std::string sub_why;
      for (const auto& sub : schema["oneOf"])
        if (check(sub, v, sub_why)) ++matches;
      if (matches != 1) {
        why = "oneOf matched " + std::to_string(matches) + " branches";
        return false;
      }
    }
    return true;
  }
};

}  // namespace meshdom::test
