#pragma once

// Minimal JSON Schema (draft-07 subset) checker for tests: type, enum,
// required, properties, additionalProperties (bool), items, minimum,
// minItems.

#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

inline void validate(const json& schema, const json& v, const std::string& path,
                     std::vector<std::string>& errors) {
  if (auto t = schema.find("type"); t != schema.end()) {
    bool ok = false;
    if (t->is_string()) {
      ok = type_matches(t->get<std::string>(), v);
    } else {
      for (const auto& alt : *t) ok = ok || type_matches(alt.get<std::string>(), v);
    }
    if (!ok) {
      errors.push_back(path + ": wrong type");
      return;
    }
  }
  if (auto e = schema.find("enum"); e != schema.end()) {
    bool found = false;
    for (const auto& alt : *e) found = found || alt == v;
    if (!found) errors.push_back(path + ": not in enum");
  }
  if (auto m = schema.find("minimum"); m != schema.end() && v.is_number()) {
    if (v.get<double>() < m->get<double>()) errors.push_back(path + ": below minimum");
  }
  if (v.is_object()) {
    if (auto req = schema.find("required"); req != schema.end())
      for (const auto& k : *req)
        if (!v.contains(k.get<std::string>()))
          errors.push_back(path + ": missing " + k.get<std::string>());
    const json props = schema.value("properties", json::object());
    for (const auto& [k, sub] : v.items()) {
      if (props.contains(k)) {
        validate(props[k], sub, path + "." + k, errors);
      } else if (schema.value("additionalProperties", true) == false) {
        errors.push_back(path + ": unexpected property " + k);
      }
    }
  }
  if (v.is_array()) {
    if (auto mi = schema.find("minItems"); mi != schema.end() && v.size() < mi->get<std::size_t>())
      errors.push_back(path + ": too few items");
    if (auto items = schema.find("items"); items != schema.end())
      for (std::size_t i = 0; i < v.size(); ++i)
        validate(*items, v[i], path + "[" + std::to_string(i) + "]", errors);
  }
}

inline std::vector<std::string> validate(const json& schema, const json& v) {
  std::vector<std::string> errors;
  validate(schema, v, "$", errors);
  return errors;
}

}  // namespace schema_check
