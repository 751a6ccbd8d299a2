#pragma once

#include <string>

#include <json.hpp>

#include "qnets/errors.hpp"

namespace qnets {

// Minimal structural validator for the committed schemas: supports type
// (string or list), required, properties, items, enum, and the two local
// extensions valuesType / valuesEnum for uniform object values.
class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::ordered_json schema)
      : schema_(std::move(schema)) {}

  bool validate(const nlohmann::ordered_json& doc, std::string* why = nullptr) const {
    std::string path = "$";
    return check(schema_, doc, path, why);
  }

 private:
  nlohmann::ordered_json schema_;

  static bool type_matches(const std::string& t, const nlohmann::ordered_json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  static bool check(const nlohmann::ordered_json& sch,
                    const nlohmann::ordered_json& doc, std::string& path,
                    std::string* why) {
    auto fail = [&](const std::string& m) {
      if (why) *why = path + ": " + m;
      return false;
    };
    if (sch.contains("type")) {
      const auto& t = sch.at("type");
      bool ok = false;
      if (t.is_string()) ok = type_matches(t.get<std::string>(), doc);
      else
        for (const auto& tt : t) ok = ok || type_matches(tt.get<std::string>(), doc);
      if (!ok) return fail("type mismatch");
    }
    if (sch.contains("enum")) {
      bool ok = false;
      for (const auto& e : sch.at("enum")) ok = ok || e == doc;
      if (!ok) return fail("value not in enum");
    }
    if (doc.is_object()) {
      if (sch.contains("required"))
        for (const auto& k : sch.at("required"))
          if (!doc.contains(k.get<std::string>()))
            return fail("missing required key " + k.get<std::string>());
      if (sch.contains("properties")) {
        for (const auto& [k, sub] : sch.at("properties").items()) {
          if (!doc.contains(k)) continue;
          std::string p2 = path + "." + k;
          std::swap(path, p2);
          bool ok = check(sub, doc.at(k), path, why);
          std::swap(path, p2);
          if (!ok) return false;
        }
      }
      if (sch.contains("valuesType")) {
        std::string t = sch.at("valuesType").get<std::string>();
        for (const auto& [k, v] : doc.items())
          if (!type_matches(t, v)) return fail("value of " + k + " has wrong type");
      }
      if (sch.contains("valuesEnum")) {
        for (const auto& [k, v] : doc.items()) {
          bool ok = false;
          for (const auto& e : sch.at("valuesEnum")) ok = ok || e == v;
          if (!ok) return fail("value of " + k + " not in enum");
        }
      }
    }
    if (doc.is_array() && sch.contains("items")) {
      int idx = 0;
      for (const auto& el : doc) {
        std::string p2 = path + "[" + std::to_string(idx++) + "]";
        std::swap(path, p2);
        bool ok = check(sch.at("items"), el, path, why);
        std::swap(path, p2);
        if (!ok) return false;
      }
    }
    return true;
  }
};

}  // namespace qnets
